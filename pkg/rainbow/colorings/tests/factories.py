from factory import Faker
from factory import LazyAttribute
from factory.django import DjangoModelFactory

from rainbow.colorings.certificates import K13_CLIQUE
from rainbow.colorings.certificates import K13_COLORS
from rainbow.colorings.certificates import K13_MATRIX
from rainbow.colorings.models import Certificate


class CertificateFactory(DjangoModelFactory[Certificate]):
    name = Faker("slug")
    source = "embedded"
    n = LazyAttribute(lambda o: len(o.matrix))
    ell = K13_COLORS
    q = K13_CLIQUE
    matrix = LazyAttribute(lambda _: [list(row) for row in K13_MATRIX])
    meta = LazyAttribute(lambda o: {"source": f"factory {o.name}"})

    class Meta:
        model = Certificate
