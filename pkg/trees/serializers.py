# File: trees/serializers.py

from rest_framework import serializers

from .shapes import Leaf, PlantedTree, TreeShapeParams, Vertex


class TreeShapeSerializer(serializers.Serializer):
    """Validates --t/--n/--k for the trees command"""
    t = serializers.IntegerField(min_value=1, help_text="Number of root children (leaves of r_t)")
    n = serializers.IntegerField(min_value=0, default=0, help_text="Number of internal vertices")
    k = serializers.IntegerField(min_value=1, help_text="Each internal vertex has k+1 children")

    def create(self, validated_data):
        return TreeShapeParams(**validated_data)


class PlantedTreeSerializer(serializers.BaseSerializer):
    """
    Nested JSON form of a planar tree:
    {"label": "root", "children": [{"label": 1, "children": [...]}, {"leaf": 2}, ...]}
    """

    def to_representation(self, tree):
        return {'label': 'root', 'children': [self._node(child) for child in tree.children]}

    def _node(self, node):
        if isinstance(node, Leaf):
            return {'leaf': node.index}
        return {'label': node.label, 'children': [self._node(child) for child in node.children]}

    def to_internal_value(self, data):
        if not isinstance(data, dict) or 'children' not in data:
            raise serializers.ValidationError({'children': 'The root object needs a children list'})
        return PlantedTree(tuple(self._parse(child) for child in data['children']))

    def _parse(self, data):
        if not isinstance(data, dict):
            raise serializers.ValidationError(f'Expected an object, got {data!r}')
        if 'leaf' in data:
            index = data['leaf']
            if not isinstance(index, int):
                raise serializers.ValidationError({'leaf': f'Leaf index must be an integer, got {index!r}'})
            return Leaf(index)
        label = data.get('label')
        children = data.get('children')
        if not isinstance(label, int) or not isinstance(children, list):
            raise serializers.ValidationError('Internal vertices need an integer label and a children list')
        return Vertex(label, tuple(self._parse(child) for child in children))


class EnumeratedTreeSerializer(serializers.Serializer):
    """One line of `trees enumerate --format json`"""
    sequence = serializers.SerializerMethodField()
    weight_exponent = serializers.SerializerMethodField()
    tree = serializers.SerializerMethodField()

    def get_sequence(self, item):
        return list(item[0].indices)

    def get_weight_exponent(self, item):
        return item[0].weight_exponent

    def get_tree(self, item):
        return PlantedTreeSerializer(item[1]).data
