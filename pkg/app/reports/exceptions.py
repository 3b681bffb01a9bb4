from rest_framework.exceptions import APIException


class UnreadableFile(APIException):
    status_code = 400
    default_detail = 'Input file cannot be read.'
    default_code = 'unreadable_file'


class InvalidArtifact(APIException):
    status_code = 400
    default_detail = 'Input file is not valid JSON.'
    default_code = 'invalid_artifact'


class InvalidArgument(APIException):
    status_code = 400
    default_detail = 'Command argument is malformed.'
    default_code = 'invalid_argument'
