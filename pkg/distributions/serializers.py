# File: distributions/serializers.py

from rest_framework import serializers

from core.qcore import QParams

from .densities import KBetaDist, KGammaDist


class QParamsSerializer(serializers.Serializer):
    """Validates --q/--k"""
    q = serializers.FloatField(min_value=0.0, help_text="Deformation parameter, 0 <= q < 1")
    k = serializers.FloatField(help_text="Shape k > 0")

    def validate_q(self, value):
        if value >= 1:
            raise serializers.ValidationError("q must be strictly below 1.")
        return value

    def validate_k(self, value):
        if not value > 0:
            raise serializers.ValidationError("k must be positive.")
        return value

    def params(self) -> QParams:
        return QParams(self.validated_data['q'], self.validated_data['k'])


class KGammaSerializer(QParamsSerializer):
    t = serializers.FloatField(help_text="Shape t > 0")

    def validate_t(self, value):
        if not value > 0:
            raise serializers.ValidationError("t must be positive.")
        return value

    def create(self, validated_data):
        return KGammaDist(QParams(validated_data['q'], validated_data['k']), validated_data['t'])


class KBetaSerializer(KGammaSerializer):
    s = serializers.FloatField(help_text="Second shape s > 0")

    def validate_s(self, value):
        if not value > 0:
            raise serializers.ValidationError("s must be positive.")
        return value

    def create(self, validated_data):
        params = QParams(validated_data['q'], validated_data['k'])
        return KBetaDist(params, validated_data['t'], validated_data['s'])


class LatticeMeasureSerializer(serializers.Serializer):
    """{support: [...], masses: [...], tail_tol}"""
    support = serializers.ListField(child=serializers.FloatField())
    masses = serializers.ListField(child=serializers.FloatField())
    tail_tol = serializers.FloatField()
