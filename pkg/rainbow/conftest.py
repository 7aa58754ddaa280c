import numpy as np
import pytest

from rainbow.colorings.certificates import k13_certificate
from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.formats import CertificateFile
from rainbow.colorings.formats import write_certificate
from rainbow.search.starts import uniform_start


@pytest.fixture
def k13() -> EdgeColoring:
    return k13_certificate()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240613)


@pytest.fixture
def random_coloring(rng):
    """Factory for uniformly random colorings of K_n."""

    def make(n: int, ell: int) -> EdgeColoring:
        return new_coloring(n, ell, uniform_start(n, ell, rng))

    return make


@pytest.fixture
def k13_file(tmp_path, k13) -> str:
    path = tmp_path / "k13.json"
    write_certificate(path, CertificateFile(coloring=k13, q=4, meta={"source": "test"}))
    return str(path)
