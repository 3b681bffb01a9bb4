from rest_framework.exceptions import APIException


class UnknownFamily(APIException):
    status_code = 400
    default_detail = 'No graph family of that name.'
    default_code = 'unknown_family'


class InvalidParameters(APIException):
    status_code = 400
    default_detail = 'Family parameters are out of range.'
    default_code = 'invalid_parameters'


class WitnessConstructionFailed(APIException):
    status_code = 500
    default_detail = 'Witness construction left its documented shape.'
    default_code = 'witness_failed'
