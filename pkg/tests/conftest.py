from typing import Iterator

import pytest

from ytc.complexes import SimplicialComplex, from_facets
from ytc.core.config import Config, configure
from ytc.core.logging import setup_logging
from ytc.young import Partition, young_complex


@pytest.fixture(autouse=True)
def reset_config() -> Iterator[None]:
    """Give every test the default configuration and drop whatever it installed."""
    configure(Config())
    yield
    configure(None)
    setup_logging()


@pytest.fixture
def limits():
    """Install a configuration with the given cap overrides."""

    def install(**caps: int) -> Config:
        config = Config(limits=caps)
        configure(config)
        return config

    return install


@pytest.fixture
def path_complex() -> SimplicialComplex:
    """The path 1 - 2 - 3 as a one-dimensional complex."""
    return from_facets([[1, 2], [2, 3]])


@pytest.fixture
def triangle_boundary() -> SimplicialComplex:
    return from_facets([[1, 2], [1, 3], [2, 3]])


@pytest.fixture
def two_edges() -> SimplicialComplex:
    """Two disjoint edges: pure, but neither connected nor Cohen-Macaulay."""
    return from_facets([[1, 2], [3, 4]])


@pytest.fixture
def projective_plane() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane."""
    return from_facets(
        [
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [1, 4, 6],
            [1, 5, 6],
            [2, 3, 6],
            [2, 4, 5],
            [2, 5, 6],
            [3, 4, 5],
            [3, 4, 6],
        ]
    )


@pytest.fixture
def example_shape() -> Partition:
    return Partition((5, 4, 2))


@pytest.fixture
def example_complex(example_shape: Partition) -> SimplicialComplex:
    """The 3-Young complex of (5, 4, 2)."""
    return young_complex(example_shape, 3)
