from __future__ import annotations

import sys
from contextlib import contextmanager
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from carterlab.builders import alternating, dihedral, symmetric
from carterlab.corpus import corpus_files, write_corpus
from carterlab.group import FiniteGroup, generate
from carterlab.io import read_group_file
from carterlab.perm import Permutation

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

REPO = Path(__file__).resolve().parent.parent
CHECKED_IN_CORPUS = REPO / "corpus"


def cyc(degree: int, *cycles) -> Permutation:
    """Permutation from 0-indexed cycles, e.g. ``cyc(4, (0, 1), (2, 3))``."""
    return Permutation.from_cycles(cycles, degree)


def klein_four() -> FiniteGroup:
    return generate([cyc(4, (0, 1), (2, 3)), cyc(4, (0, 2), (1, 3))])


def d8() -> FiniteGroup:
    """The dihedral group of order 8 on 4 points, with center (0 2)(1 3)."""
    return generate([cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])


@lru_cache(maxsize=None)
def named(name: str) -> FiniteGroup:
    return {
        "Sym3": lambda: symmetric(3),
        "Sym4": lambda: symmetric(4),
        "Alt4": lambda: alternating(4),
        "Alt5": lambda: alternating(5),
        "Sym5": lambda: symmetric(5),
        "D8": d8,
        "V4": klein_four,
        "D10": lambda: dihedral(5),
    }[name]()


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory) -> Path:
    """The checked-in corpus, regenerated into a temporary directory if absent."""
    if CHECKED_IN_CORPUS.is_dir() and corpus_files(CHECKED_IN_CORPUS):
        return CHECKED_IN_CORPUS
    root = tmp_path_factory.mktemp("corpus")
    write_corpus(root)
    return root


@lru_cache(maxsize=None)
def _load(path: str):
    gf = read_group_file(Path(path))
    return gf.id, gf.group()


@pytest.fixture(scope="session")
def soluble_corpus(corpus_dir) -> list[tuple[str, FiniteGroup]]:
    return [_load(str(p)) for p in corpus_files(corpus_dir / "soluble")]


@pytest.fixture(scope="session")
def named_corpus(corpus_dir) -> list[tuple[str, FiniteGroup]]:
    return [_load(str(p)) for p in corpus_files(corpus_dir / "named")]


# -- acceptance reporting --------------------------------------------------------

_ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = {}


@pytest.fixture
def acceptance(request):
    """``with acceptance("3", title) as note:`` records PASS or FAIL for one criterion."""
    results = request.config.stash[_ACCEPTANCE]

    @contextmanager
    def record(key: str, title: str):
        details: list[str] = []
        try:
            yield details.append
        except BaseException as exc:
            reason = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
            results[key] = ("FAIL", title, details + [reason])
            raise
        results[key] = ("PASS", title, details)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        status, title, details = results[key]
        extra = f" ({'; '.join(details)})" if details else ""
        terminalreporter.write_line(f"criterion {key}: {status} - {title}{extra}")
