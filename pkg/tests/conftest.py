import pytest

from coherent import relgraph
from coherent.terms import THEORY_NAMES


@pytest.fixture(params=THEORY_NAMES)
def theory_name(request):
    return request.param


@pytest.fixture(params=["python", "compiled"])
def kernel(request):
    if request.param == "compiled" and not relgraph.compiled_available():
        pytest.skip("compiled kernel not built")
    previous = relgraph.use_backend(request.param)
    yield request.param
    relgraph.use_backend(previous)
