from rest_framework import serializers

from decompositions.services.model import Decomposition
from graphs.exceptions import UnknownVertex


class NodeSerializer(serializers.Serializer):
    id = serializers.IntegerField()
    bag = serializers.ListField(child=serializers.CharField(), allow_empty=True)


class DecompositionSerializer(serializers.Serializer):
    """JSON form ``{graph, root, nodes: [{id, bag}], edges}``; bags hold vertex labels.

    The host graph comes in through ``context['graph']``; ``graph`` must be its
    fingerprint.
    """
    graph = serializers.CharField()
    root = serializers.IntegerField(allow_null=True, required=False, default=None)
    nodes = NodeSerializer(many=True)
    edges = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(), min_length=2, max_length=2),
        allow_empty=True,
    )

    def validate_graph(self, value):
        g = self.context['graph']
        if value != g.fingerprint:
            raise serializers.ValidationError(f'Decomposition was written for graph {value}, not {g.fingerprint}.')
        return value

    def validate(self, attrs):
        g = self.context['graph']
        ids = [node['id'] for node in attrs['nodes']]
        if len(set(ids)) != len(ids):
            raise serializers.ValidationError({'nodes': 'Node ids must be unique.'})
        try:
            attrs['bags'] = {node['id']: g.vertices_of(node['bag']) for node in attrs['nodes']}
        except UnknownVertex as e:
            raise serializers.ValidationError({'nodes': str(e.detail)})
        return attrs

    def create(self, validated_data):
        return Decomposition(
            self.context['graph'],
            validated_data['bags'],
            [tuple(edge) for edge in validated_data['edges']],
            root=validated_data['root'],
        )

    def to_representation(self, instance: Decomposition):
        g = instance.graph
        return {
            'graph': g.fingerprint,
            'root': instance.root,
            'nodes': [{'id': t, 'bag': g.labels(instance.bag(t))} for t in instance.nodes],
            'edges': [list(edge) for edge in instance.edges],
        }


class PathAdditionSerializer(serializers.Serializer):
    node = serializers.IntegerField()
    path = serializers.SerializerMethodField()
    child = serializers.IntegerField(allow_null=True)
    components_before = serializers.IntegerField()
    components_after = serializers.IntegerField()

    def get_path(self, obj):
        g = self.context['graph']
        return [g.label(v) for v in obj.path]
