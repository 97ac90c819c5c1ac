from rest_framework import serializers

from algebra.eigenvalue_orbits import FieldParam
from algebra.weyl import Family
from pairings.lusztig_decomposition import BASE_ROUTES, READINGS

from .models import ComputationRun

COMMANDS = ['pair', 'factorize', 'multiplicity', 'oracle']
ROUTES = ['direct', 'closed_form', 'factorized']
PAIR_KINDS = ['GL', 'U', 'SO']


class EigenvalueSerializer(serializers.Serializer):
    level = serializers.IntegerField(min_value=1)
    exponent = serializers.IntegerField()


class GroupSerializer(serializers.Serializer):
    family = serializers.ChoiceField(choices=[f.value for f in Family])
    n = serializers.IntegerField(min_value=0)


class DualPairSerializer(serializers.Serializer):
    group = GroupSerializer()
    mu = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False, default=list)
    lam = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False, default=list)
    split_sign = serializers.ChoiceField(choices=[1, -1], required=False, allow_null=True)
    element = EigenvalueSerializer(many=True, required=False, allow_null=True)

    def validate(self, attrs):
        blocks = len(attrs.get('mu', [])) + len(attrs.get('lam', []))
        element = attrs.get('element')
        if element is not None and len(element) != blocks:
            raise serializers.ValidationError(f"Element has {len(element)} coordinates for {blocks} blocks")
        return attrs


class SeriesOrbitSerializer(serializers.Serializer):
    seed = EigenvalueSerializer()
    nu = serializers.IntegerField(min_value=0)
    lam = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False, default=list)

    def get_fields(self):
        # 'lambda' is a keyword, so the field is declared as lam and exposed under its JSON name
        fields = super().get_fields()
        fields['lambda'] = fields.pop('lam')
        return fields


class SeriesSerializer(serializers.Serializer):
    group = GroupSerializer()
    split_sign = serializers.ChoiceField(choices=[1, -1], required=False, allow_null=True)
    orbits = SeriesOrbitSerializer(many=True, required=False, default=list)


class OptionsSerializer(serializers.Serializer):
    routes = serializers.ListField(child=serializers.ChoiceField(choices=ROUTES), required=False, allow_empty=False)
    base_route = serializers.ChoiceField(choices=list(BASE_ROUTES), default='closed_form')
    reading = serializers.ChoiceField(choices=list(READINGS), default='union')
    padding_variant = serializers.ChoiceField(choices=[0, 1], default=0)
    theta_seed = serializers.IntegerField(min_value=0, default=0)
    tau_seed = serializers.IntegerField(min_value=0, default=0)
    oracle_bound = serializers.IntegerField(min_value=1, required=False)


class JobSpecSerializer(serializers.Serializer):
    command = serializers.ChoiceField(choices=COMMANDS)
    q = serializers.IntegerField(required=False, default=3)
    pair_kind = serializers.ChoiceField(choices=PAIR_KINDS, required=False)
    big = DualPairSerializer(required=False)
    small = DualPairSerializer(required=False)
    pi = SeriesSerializer(required=False)
    sigma = SeriesSerializer(required=False)
    options = OptionsSerializer(required=False)

    def validate_q(self, value):
        try:
            FieldParam(value)
        except ValueError as e:
            raise serializers.ValidationError(str(e))
        return value

    def validate(self, attrs):
        command = attrs['command']
        if command in ('pair', 'factorize'):
            missing = [key for key in ('pair_kind', 'big', 'small') if key not in attrs]
            if missing:
                raise serializers.ValidationError(f"'{command}' jobs need {', '.join(missing)}")
        if command == 'multiplicity':
            missing = [key for key in ('pi', 'sigma') if key not in attrs]
            if missing:
                raise serializers.ValidationError(f"'multiplicity' jobs need {', '.join(missing)}")
        attrs.setdefault('options', OptionsSerializer().to_internal_value({}))
        return attrs


class ComputationRunSerializer(serializers.ModelSerializer):
    class Meta:
        model = ComputationRun
        fields = [
            'id', 'command', 'status', 'job', 'results', 'routes_agree',
            'started_at', 'completed_at', 'error_logs',
        ]
