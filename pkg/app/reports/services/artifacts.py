"""Reading and writing the on-disk artifacts: edge lists and JSON documents."""
from __future__ import annotations

import json
import logging
from pathlib import Path

from brambles.serializers import BrambleSerializer
from brambles.services.bramble import Bramble
from decompositions.serializers import DecompositionSerializer, PathAdditionSerializer
from decompositions.services.connectify import PathAddition
from decompositions.services.model import Decomposition
from graphs.services.edge_list import parse_edge_list
from graphs.services.graph import Graph
from reports import exceptions

logger = logging.getLogger(__name__)


def _read(path: str | Path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise exceptions.UnreadableFile(detail=f'{path}: {e.strerror or e}')


def read_graph(path: str | Path) -> Graph:
    return parse_edge_list(_read(path), name=Path(path).stem)


def read_json(path: str | Path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise exceptions.InvalidArtifact(detail=f'{path}: {e.msg} at line {e.lineno}')


def write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
    logger.info(f'Wrote {path}')
    return path


def write_json(path: str | Path, data) -> Path:
    return write_text(path, json.dumps(data, indent=2) + '\n')


def load_decomposition(g: Graph, path: str | Path) -> Decomposition:
    serializer = DecompositionSerializer(data=read_json(path), context={'graph': g})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def dump_decomposition(d: Decomposition) -> dict:
    return DecompositionSerializer(d).data


def load_bramble(g: Graph, path: str | Path) -> Bramble:
    """Brambles are stored as a bare list of label lists."""
    data = read_json(path)
    serializer = BrambleSerializer(data={'elements': data}, context={'graph': g})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def dump_bramble(b: Bramble) -> list:
    return BrambleSerializer(b).data['elements']


def dump_trace(g: Graph, trace: list[PathAddition]) -> list:
    return PathAdditionSerializer(trace, many=True, context={'graph': g}).data


def load_trace(g: Graph, path: str | Path) -> list[tuple[int, frozenset[int]]]:
    """``(node, path vertices)`` per addition of a saved trace."""
    data = read_json(path)
    if not isinstance(data, list) or not all(isinstance(a, dict) and isinstance(a.get('path'), list) for a in data):
        raise exceptions.InvalidArtifact(detail=f'{path}: expected a list of path additions.')
    return [(addition.get('node'), g.vertices_of(addition['path'])) for addition in data]
