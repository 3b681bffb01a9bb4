from collections.abc import Callable, Mapping
from dataclasses import dataclass

from families import exceptions
from families.services.duality import duality_graph
from families.services.subdivided import complete_graph, cycle_graph, subdivided_complete, subdivided_grid
from graphs.services.graph import Graph


@dataclass(frozen=True)
class Family:
    build: Callable[..., Graph]
    parameters: tuple[str, ...]
    defaults: Mapping[str, int]


FAMILIES = {
    'cycle': Family(cycle_graph, ('m',), {'m': 6}),
    'complete': Family(complete_graph, ('m',), {'m': 4}),
    'subdivided-complete': Family(subdivided_complete, ('n', 'k'), {'n': 4, 'k': 1}),
    'subdivided-grid': Family(subdivided_grid, ('n',), {'n': 4}),
    'duality': Family(duality_graph, ('n',), {'n': 4}),
}


def generate(name: str, **params: int | None) -> Graph:
    try:
        family = FAMILIES[name]
    except KeyError:
        raise exceptions.UnknownFamily(detail=f'Unknown family {name!r}; choose one of {", ".join(FAMILIES)}.')
    unknown = {key for key, value in params.items() if value is not None} - set(family.parameters)
    if unknown:
        raise exceptions.InvalidParameters(detail=f'{name} takes {", ".join(family.parameters)}, not {", ".join(sorted(unknown))}.')
    values = {key: params.get(key) if params.get(key) is not None else family.defaults[key] for key in family.parameters}
    return family.build(**values)
