# File: core/serializers.py
import math

from rest_framework import serializers


class VerifyCaseSerializer(serializers.Serializer):
    id = serializers.CharField()
    anchor = serializers.CharField()
    params = serializers.DictField()
    lhs = serializers.SerializerMethodField()
    rhs = serializers.SerializerMethodField()
    rel_err = serializers.SerializerMethodField()
    tol = serializers.FloatField()
    passed = serializers.BooleanField()
    reason = serializers.CharField(allow_blank=True)

    def get_lhs(self, case):
        return self._plain(case.lhs)

    def get_rhs(self, case):
        return self._plain(case.rhs)

    def get_rel_err(self, case):
        return case.rel_err if math.isfinite(case.rel_err) else None

    @staticmethod
    def _plain(value):
        if value is None or isinstance(value, (str, bool, int)):
            return value
        value = float(value)
        return value if math.isfinite(value) else None

    def to_representation(self, instance):
        data = super().to_representation(instance)
        data['pass'] = data.pop('passed')
        return data


class VerifyReportSerializer(serializers.Serializer):
    """{suite, cases: [...], pass}"""
    suite = serializers.CharField()
    cases = VerifyCaseSerializer(many=True)
    passed = serializers.BooleanField()

    def to_representation(self, instance):
        data = super().to_representation(instance)
        data['pass'] = data.pop('passed')
        return data
