import os
import sys

import pytest

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SEEDS5 = os.path.join(REPO_ROOT, "artifacts", "seeds5.jsonl")
M5_CACHE = os.path.join(REPO_ROOT, "artifacts", "m5_cache")
A5_PROGRESS = os.path.join(REPO_ROOT, "artifacts", "a5_progress.jsonl")


def seeds5_complete() -> bool:
    if not os.path.exists(SEEDS5):
        return False
    try:
        from cubichecke.level5 import read_seed_file

        return len(read_seed_file(SEEDS5)) == 1920
    except Exception:
        return False


@pytest.fixture(scope="session")
def rng_seed():
    return 20260817
