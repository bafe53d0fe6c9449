from rest_framework import serializers

from apps.seller.models import SellerCase

from .models import SweepRow, SweepStatus

CSV_COLUMNS = ('gamma', 'A', 'B', 'm', 'a', 'b', 'seller_case', 'status')


class SignificantFloatField(serializers.FloatField):
    """Число с 6 значащими цифрами; пустая строка читается как None"""

    def validate_empty_values(self, data):
        if data == '':
            data = None
        return super().validate_empty_values(data)

    def to_representation(self, value):
        return '%#.6g' % value


class SweepRowSerializer(serializers.Serializer):
    """Строка CSV прогона"""

    gamma = SignificantFloatField()
    A = SignificantFloatField(allow_null=True, required=False)
    B = SignificantFloatField(allow_null=True, required=False)
    m = SignificantFloatField(allow_null=True, required=False)
    a = SignificantFloatField(allow_null=True, required=False)
    b = SignificantFloatField(allow_null=True, required=False)
    seller_case = serializers.ChoiceField(
        choices=SellerCase.choices, allow_null=True, allow_blank=True, required=False
    )
    status = serializers.ChoiceField(choices=SweepStatus.choices)

    def create(self, validated_data):
        validated_data['seller_case'] = validated_data.get('seller_case') or None
        return SweepRow(**validated_data)
