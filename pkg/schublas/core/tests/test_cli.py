import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest.mock import patch

import orjson

from schublas.core.common.errors import ResourceLimit
from schublas.core.config import config_from_env, configure
from schublas.core.controller.cli import EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, run_cli
from schublas.core.service.bases import reset_caches


class CliTests(unittest.TestCase):
    def tearDown(self) -> None:
        configure(config_from_env())
        reset_caches()

    def _run(self, *argv: str):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            code = run_cli(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def test_schubert_text(self) -> None:
        """
        schubert 명령의 텍스트 출력을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        code, out, _ = self._run("schubert", "--perm", "2,1,4,3", "--format", "text")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "x1^2 + x1*x2 + x1*x3\n")

    def test_schubert_json(self) -> None:
        code, out, _ = self._run("schubert", "--perm", "2,1,4,3", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        payload = orjson.loads(out)
        self.assertEqual([term["exp"] for term in payload["terms"]], [[1, 0, 1], [1, 1], [2]])

    def test_output_is_deterministic(self) -> None:
        """
        같은 입력은 바이트 단위로 같은 출력을 내는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        first = self._run("toplascoux", "--comp", "0,3,0,2", "--format", "json")
        second = self._run("toplascoux", "--comp", "0,3,0,2", "--format", "json", "--threads", "2")
        self.assertEqual(first[1], second[1])
        by_grids = self._run("toplascoux", "--comp", "0,3,0,2", "--method", "bpd", "--format", "json")
        self.assertEqual(first[1], by_grids[1])

    def test_hilbert(self) -> None:
        code, out, _ = self._run("hilbert", "--max-degree", "3", "--format", "text")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "1, 1, 2, 4")

    def test_std_and_bpd(self) -> None:
        """
        std 와 bpd 명령을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        code, out, _ = self._run("std", "--comp", "0,4,2", "--m", "4", "--n", "3", "--format", "text")
        self.assertEqual((code, out.strip()), (EXIT_OK, "3,1,5,2,4"))
        code, out, _ = self._run("bpd", "--perm", "2,1,4,3", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(orjson.loads(out)["count"], 3)

    def test_support_json(self) -> None:
        code, out, _ = self._run("support", "--schubert", "3,1,5,2,4", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        support = orjson.loads(out)["support"]
        self.assertEqual(len(support), 5)
        self.assertEqual(support[0], [2, 0, 2])

    def test_snp_from_file(self) -> None:
        """
        JSON 파일로 받은 다항식의 SNP 판정을 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "f.json"
            path.write_bytes(b'{"terms": [{"exp": [2], "coeff": "1"}, {"exp": [0, 2], "coeff": "1"}]}')
            code, out, _ = self._run("snp", "--input", str(path), "--format", "text")
        self.assertEqual((code, out.strip()), (EXIT_OK, "false witness=1,1"))

    def test_invalid_permutation(self) -> None:
        """
        잘못된 순열은 종료 코드 2와 오류 이름을 stderr 에 남기는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        code, out, err = self._run("schubert", "--perm", "1,1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("InvalidPermutation:"))

    def test_usage_errors(self) -> None:
        code, _, _ = self._run("schubert")
        self.assertEqual(code, EXIT_USAGE)
        code, _, err = self._run("toplascoux", "--comp", "1,1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertTrue(err.startswith("NotSnowy:"))
        code, _, _ = self._run("snp", "--input", os.path.join(tempfile.gettempdir(), "schublas-missing.json"))
        self.assertEqual(code, EXIT_USAGE)

    def test_resource_limit(self) -> None:
        """
        설정 파일의 term_limit 을 넘으면 종료 코드 3인지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "engine.json"
            path.write_text('{"term_limit": 2}', encoding="utf-8")
            code, out, err = self._run("schubert", "--perm", "2,1,4,3", "--config", str(path))
        self.assertEqual(code, EXIT_RESOURCE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("ResourceLimit:"))

    def test_verify_hilbert(self) -> None:
        code, out, _ = self._run("verify", "--suite", "hilbert", "--format", "text")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("suite=hilbert checks=11 failures=0", out.strip().splitlines()[-1])

    def test_verify_resource_limit(self) -> None:
        """
        검증 스윕 중 자원 한도를 넘으면 실패(1)가 아니라 3 으로 끝나는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        target = "schublas.core.service.verification.suites.enumerate_snowy_by_raj"
        with patch(target, side_effect=ResourceLimit("step_limit", 1, 2)):
            code, out, err = self._run("verify", "--suite", "hilbert")
        self.assertEqual(code, EXIT_RESOURCE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("ResourceLimit:"))


if __name__ == "__main__":
    unittest.main()
