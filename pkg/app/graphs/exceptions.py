from rest_framework.exceptions import APIException


# edge-list input
class EdgeListSyntaxError(APIException):
    status_code = 400
    default_detail = 'Malformed edge-list line.'
    default_code = 'edge_list_syntax'

    def __init__(self, line_number: int, line: str):
        super().__init__(detail=f'line {line_number}: expected two vertex tokens, got {line!r}')
        self.line_number = line_number


class SelfLoopError(APIException):
    status_code = 400
    default_detail = 'Self-loops are not allowed in a simple graph.'
    default_code = 'self_loop'

    def __init__(self, line_number: int, label: str):
        super().__init__(detail=f'line {line_number}: self-loop at {label!r}')
        self.line_number = line_number


class EdgeListEncodingError(APIException):
    status_code = 400
    default_detail = 'Edge-list input is not valid UTF-8.'
    default_code = 'edge_list_encoding'

    def __init__(self, line_number: int):
        super().__init__(detail=f'line {line_number}: input is not valid UTF-8')
        self.line_number = line_number


# graph values
class InvalidGraph(APIException):
    status_code = 400
    default_detail = 'Graph violates the simple-graph invariants.'
    default_code = 'invalid_graph'


class UnknownVertex(APIException):
    status_code = 400
    default_detail = 'Vertex does not belong to the graph.'
    default_code = 'unknown_vertex'


class InvalidPath(APIException):
    status_code = 400
    default_detail = 'Vertex sequence is not a path of the graph.'
    default_code = 'invalid_path'


class InvalidCycle(APIException):
    status_code = 400
    default_detail = 'Vertex sequence is not a cycle of the graph.'
    default_code = 'invalid_cycle'


class GraphDisconnected(APIException):
    status_code = 400
    default_detail = 'The operation requires a connected graph.'
    default_code = 'graph_disconnected'
