from rest_framework.exceptions import APIException


# decomposition values
class InvalidTree(APIException):
    status_code = 400
    default_detail = 'Decomposition tree is not a tree.'
    default_code = 'invalid_tree'


class GraphMismatch(APIException):
    status_code = 400
    default_detail = 'Decomposition belongs to a different graph.'
    default_code = 'graph_mismatch'


class UnknownNode(APIException):
    status_code = 400
    default_detail = 'Node is not part of the decomposition tree.'
    default_code = 'unknown_node'


class NotRooted(APIException):
    status_code = 400
    default_detail = 'The operation requires a rooted decomposition.'
    default_code = 'not_rooted'


class EmptyDecomposition(APIException):
    status_code = 400
    default_detail = 'Decomposition has no bags.'
    default_code = 'empty_decomposition'


class InvalidDecomposition(APIException):
    status_code = 400
    default_detail = 'Decomposition violates the tree-decomposition axioms.'
    default_code = 'invalid_decomposition'


class UnstableDecomposition(APIException):
    status_code = 400
    default_detail = 'Decomposition is not stable.'
    default_code = 'unstable_decomposition'


# solver
class SolverLimitExceeded(APIException):
    status_code = 413
    default_detail = 'Graph exceeds the exact solver limit; use the min-fill heuristic instead.'
    default_code = 'solver_limit'


class SolverInvariantBroken(APIException):
    status_code = 500
    default_detail = 'The exact solver produced an inconsistent decomposition.'
    default_code = 'solver_invariant'


class StabilizationDiverged(APIException):
    status_code = 500
    default_detail = 'Stabilisation did not terminate within its iteration cap.'
    default_code = 'stabilization_diverged'


# construction
class BagAlreadyConnected(APIException):
    status_code = 400
    default_detail = 'Bag is already connected; no admissible path is needed.'
    default_code = 'bag_connected'


class AdmissiblePathMissing(APIException):
    status_code = 500
    default_detail = 'No admissible path although the working decomposition is stable.'
    default_code = 'admissible_path_missing'


class ConstructionInvariantBroken(APIException):
    status_code = 500
    default_detail = 'A construction invariant failed.'
    default_code = 'construction_invariant'
