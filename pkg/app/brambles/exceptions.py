from rest_framework.exceptions import APIException


class NotABramble(APIException):
    status_code = 400
    default_detail = 'Vertex sets do not form a bramble.'
    default_code = 'not_a_bramble'


class NoCoveringPart(APIException):
    status_code = 400
    default_detail = 'No bag meets every bramble element; the decomposition or bramble is invalid.'
    default_code = 'no_covering_part'


class BrambleLimitExceeded(APIException):
    status_code = 413
    default_detail = 'Graph exceeds the exhaustive bramble search limit.'
    default_code = 'bramble_limit'


class BoundViolated(APIException):
    status_code = 500
    default_detail = 'A proven upper bound failed.'
    default_code = 'bound_violated'
