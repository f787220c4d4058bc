import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from densetop.enumeration import all_spaces  # noqa: E402

settings.register_profile("densetop", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("densetop")


def spaces_upto(max_n: int):
    """Strategy: a labeled topology on 0..max_n points."""
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(all_spaces(n)))


@pytest.fixture
def report_line(capsys):
    def emit(text):
        with capsys.disabled():
            print(text)
    return emit
