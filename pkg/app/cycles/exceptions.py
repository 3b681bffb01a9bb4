from rest_framework.exceptions import APIException


class NoCycle(APIException):
    status_code = 400
    default_detail = 'Graph is a forest; the cycle-length parameter is undefined.'
    default_code = 'no_cycle'


class NotGeodesic(APIException):
    status_code = 400
    default_detail = 'Cycle is not geodesic in the graph.'
    default_code = 'not_geodesic'


class SearchLimitExceeded(APIException):
    status_code = 413
    default_detail = 'Cycle search exceeds its configured limit.'
    default_code = 'search_limit'


class CycleSpaceIncomplete(APIException):
    status_code = 500
    default_detail = 'Enumerated cycles do not span the cycle space.'
    default_code = 'cycle_space_incomplete'
