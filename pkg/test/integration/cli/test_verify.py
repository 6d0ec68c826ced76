# Copyright 2026 The semidom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json

import pytest

from semidom import _cli
from semidom.verify import claims


def _reports(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines()]


class TestVerify:
    def test_single_claim(self, capsys, semidom):
        semidom("verify", "--claim", "obs2.2", "--max-n", "8")

        (report,) = _reports(capsys.readouterr().out)
        assert report["claim"] == "obs2.2"
        assert report["verdict"] == "pass"
        assert report["bounds"] == {"max_n": 8, "min_n": 3}
        assert report["orders"] == [3, 4, 5, 6, 7, 8]

    def test_streamed_graphs(self, capsys, semidom, asset_graph):
        semidom(
            "verify",
            "--claim",
            "thm2.4",
            "--min-n",
            "3",
            "--max-n",
            "4",
            "--graphs",
            asset_graph("small.g6"),
        )

        (report,) = _reports(capsys.readouterr().out)
        assert report["verdict"] == "pass"
        assert report["instances"] == 3 + 6

    def test_all_claims(self, capsys, caplog, semidom):
        semidom("verify", "--claim", "all", "--max-n", "5")

        reports = _reports(capsys.readouterr().out)
        assert all(r["verdict"] == "pass" for r in reports)
        assert "cor3.4" not in {r["claim"] for r in reports}
        assert "cor3.4: skipped" in caplog.text

    def test_all_claims_clamps_budget(self, caplog, semidom, monkeypatch):
        calls = []

        def _fake(claim, bounds, graphs, jobs):
            calls.append((claim, bounds.max_n))
            raise SystemExit(0)

        monkeypatch.setattr(_cli, "run_verification", _fake)
        with pytest.raises(SystemExit):
            semidom("verify", "--claim", "all", "--max-n", "100")

        assert calls == [("obs2.1", 14)]
        assert "clamping --max-n 100 to its budget 14" in caplog.text

    def test_jobs(self, capsys, semidom, monkeypatch):
        monkeypatch.setenv("SEMIDOM_JOBS", "2")
        semidom("verify", "--claim", "thm3.2", "--max-n", "8", "--jobs", "1")

        (report,) = _reports(capsys.readouterr().out)
        assert report["verdict"] == "pass"

    @pytest.mark.parametrize(
        ("args", "message"),
        [
            (("--claim", "thm9.9"), "unknown claim"),
            (("--claim", "obs2.1", "--max-n", "15"), "exceeds the budget"),
            (("--claim", "obs2.1", "--min-n", "9", "--max-n", "4"), "invalid bounds"),
        ],
    )
    def test_errors(self, caplog, semidom, args, message):
        with pytest.raises(SystemExit) as exc_info:
            semidom("verify", *args)

        assert exc_info.value.code == 2
        assert message in caplog.text

    def test_invalid_jobs(self, capsys, semidom, monkeypatch):
        with pytest.raises(SystemExit) as exc_info:
            semidom("verify", "--claim", "obs2.1", "--jobs", "0")
        assert exc_info.value.code == 2
        assert "--jobs must be positive" in capsys.readouterr().err

        monkeypatch.setenv("SEMIDOM_JOBS", "many")
        with pytest.raises(SystemExit) as exc_info:
            semidom("verify", "--claim", "obs2.1")
        assert exc_info.value.code == 2
        assert "can't coerce 'many' from SEMIDOM_JOBS" in capsys.readouterr().err

    def test_failing_claim(self, caplog, capsys, semidom, monkeypatch):
        monkeypatch.setattr(claims.MsdPathAndCycle, "EXPECTED", {r: 4 for r in range(5)})
        with pytest.raises(SystemExit) as exc_info:
            semidom("verify", "--claim", "obs2.2", "--max-n", "4")

        assert exc_info.value.code == 1
        (report,) = _reports(capsys.readouterr().out)
        assert report["verdict"] == "fail"
        assert report["failures"] == 4
        assert [c["key"] for c in report["counterexamples"]] == ["C3", "P3", "C4", "P4"]
        assert "FAIL: obs2.2" in caplog.text


class TestCensus:
    def test_table(self, capsys, semidom):
        semidom("census", "--max-n", "6")

        output = capsys.readouterr().out
        assert "Trees by class" in output
        assert "Class 3" in output

    def test_lower_bound(self, capsys, semidom):
        with pytest.raises(SystemExit) as exc_info:
            semidom("census", "--max-n", "2")

        assert exc_info.value.code == 2
        assert "--max-n must be at least 3" in capsys.readouterr().err
