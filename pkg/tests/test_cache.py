"""Cache persistence: bit-exact round trips and forgiving loads."""

import json
import logging

import pytest

from kacres import resolution
from kacres.cache import load_cache, save_cache
from kacres.resolution import reset_memo, resolve, summand_counts

from conftest import D


@pytest.fixture(autouse=True)
def fresh_memo():
    reset_memo()
    yield
    reset_memo()


class TestRoundTrip:
    def test_save_load_save_is_bit_exact(self, tmp_path):
        resolve(D(0, 1, 2), 4)
        resolve(D(0, 2, 4, 5), 3)
        first = tmp_path / "a.jsonl"
        second = tmp_path / "b.jsonl"
        written = save_cache(first)
        assert written == len(resolution._COUNT_MEMO) > 0
        reset_memo()
        installed, skipped = load_cache(first)
        assert (installed, skipped) == (written, 0)
        save_cache(second)
        assert first.read_bytes() == second.read_bytes()

    def test_loaded_entries_give_same_counts(self, tmp_path):
        expect = summand_counts(D(0, 1, 2), 4)
        path = tmp_path / "memo.jsonl"
        save_cache(path)
        reset_memo()
        load_cache(path)
        assert summand_counts(D(0, 1, 2), 4) == expect

    def test_empty_memo_saves_empty_file(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        assert save_cache(path) == 0
        assert path.read_bytes() == b""
        assert load_cache(path) == (0, 0)


class TestMergeSemantics:
    def test_shallow_file_does_not_replace_deeper_memo(self, tmp_path):
        resolve(D(0, 1), 2)
        path = tmp_path / "memo.jsonl"
        save_cache(path)
        reset_memo()
        resolve(D(0, 1), 5)
        deep = resolution._COUNT_MEMO[(0, 1)]
        installed, skipped = load_cache(path)
        assert installed == 0 and skipped == 0
        assert resolution._COUNT_MEMO[(0, 1)] is deep

    def test_deeper_file_replaces_shallow_memo(self, tmp_path):
        resolve(D(0, 1), 5)
        path = tmp_path / "memo.jsonl"
        save_cache(path)
        reset_memo()
        resolve(D(0, 1), 2)
        installed, _ = load_cache(path)
        assert installed >= 1
        assert resolution._COUNT_MEMO[(0, 1)][0] == 5


class TestForgivingLoad:
    @pytest.mark.parametrize(
        "bad",
        [
            "not json at all {",
            '{"v":2,"dots":[0,1],"depth":0,"terms":[[[[0,1],1]]]}',
            '{"v":1,"dots":[1,0],"depth":0,"terms":[[[[0,1],1]]]}',
            '{"v":1,"dots":[1,2],"depth":0,"terms":[[[[1,2],1]]]}',
            '{"v":1,"dots":[0,1],"depth":1,"terms":[[[[0,1],1]]]}',
            '{"v":1,"dots":[0,1],"depth":0,"terms":[[[[0,1],0]]]}',
            '{"v":1,"dots":[0,1],"depth":0,"terms":[[[[0,5],1]]]}',
            '{"v":1,"dots":[0,1],"depth":0,"terms":[[[[0,1],1],[[0,1],1]]]}',
            '[1,2,3]',
        ],
    )
    def test_bad_lines_skipped_with_warning(self, tmp_path, caplog, bad):
        path = tmp_path / "memo.jsonl"
        path.write_text(bad + "\n" + self._good_line_text() + "\n")
        with caplog.at_level(logging.WARNING, logger="kacres.cache"):
            installed, skipped = load_cache(path)
        assert skipped == 1
        assert installed == 1
        assert any("skipping cache line 1" in rec.message for rec in caplog.records)

    def _good_line_text(self):
        return json.dumps(
            {"v": 1, "dots": [0, 5], "depth": 0, "terms": [[[[0, 5], 1]]]},
            sort_keys=True,
            separators=(",", ":"),
        )

    def test_blank_lines_are_ignored(self, tmp_path):
        path = tmp_path / "memo.jsonl"
        path.write_text("\n\n" + self._good_line_text() + "\n\n")
        assert load_cache(path) == (1, 0)
