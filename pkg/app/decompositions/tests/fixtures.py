from decompositions.services.model import Decomposition
from graphs.services.edge_list import parse_edge_list

C6 = '1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n'
K4 = '1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n'
P4 = 'a b\nb c\nc d\n'


def labelled(g, bags, edges=(), root=None):
    """Decomposition from ``{node: [labels]}``."""
    return Decomposition(g, {t: g.vertices_of(bag) for t, bag in bags.items()}, edges, root)


def bag_labels(d):
    return {t: set(d.graph.labels(d.bag(t))) for t in d.nodes}


def c6_path_tree(root=1):
    """C6 with the path tree t1{1,2,6} - t2{2,5,6} - t3{2,3,5} - t4{3,4,5}."""
    g = parse_edge_list(C6)
    bags = {1: '126', 2: '256', 3: '235', 4: '345'}
    return g, labelled(g, {t: list(bag) for t, bag in bags.items()}, [(1, 2), (2, 3), (3, 4)], root)
