from rest_framework import serializers

from brambles.services.bramble import Bramble
from graphs.exceptions import UnknownVertex


class BrambleSerializer(serializers.Serializer):
    """A bramble as ``[[labels], ...]``; the host graph comes in through ``context['graph']``."""
    elements = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), allow_empty=False),
    )

    def validate_elements(self, value):
        g = self.context['graph']
        try:
            return [g.vertices_of(labels) for labels in value]
        except UnknownVertex as e:
            raise serializers.ValidationError(str(e.detail))

    def create(self, validated_data):
        return Bramble(self.context['graph'], validated_data['elements'])

    def to_representation(self, instance: Bramble):
        return {'elements': instance.labels()}
