import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from schublas.core.common.errors import ConfigError
from schublas.core.config import build_config, config_from_env, configure, current_config, load_engine_config
from schublas.settings import build_logging_config


class EngineConfigTests(unittest.TestCase):
    def tearDown(self) -> None:
        configure(config_from_env())

    def test_defaults(self) -> None:
        """
        기본 한도를 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        with mock.patch.dict(os.environ, {}, clear=True):
            config = config_from_env()
        self.assertEqual(config.term_limit, 1_000_000)
        self.assertEqual(config.step_limit, 100_000)
        self.assertEqual(config.output_format, "json")
        self.assertGreaterEqual(config.thread_count(), 1)
        self.assertLessEqual(config.thread_count(), 8)

    def test_invalid_values(self) -> None:
        """
        잘못된 설정 값이 ConfigError 로 바뀌는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        with self.assertRaises(ConfigError):
            build_config(term_limit=0)
        with self.assertRaises(ConfigError):
            build_config(parallelism=-1)
        with self.assertRaises(ConfigError):
            build_config(unknown_field=1)
        self.assertEqual(build_config(parallelism=3).thread_count(), 3)

    def test_config_file(self) -> None:
        """
        JSON 설정 파일이 기본값을 덮어쓰는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "engine.json"
            path.write_text('{"term_limit": 50, "parallelism": 2}', encoding="utf-8")
            with mock.patch.dict(os.environ, {}, clear=True):
                config = load_engine_config(path)
            self.assertEqual(config.term_limit, 50)
            self.assertEqual(config.parallelism, 2)

            with mock.patch.dict(os.environ, {"SCHUBLAS_THREADS": "3"}, clear=True):
                config = load_engine_config(path)
            self.assertEqual(config.parallelism, 3)

    def test_bad_config_file(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            missing = Path(directory) / "missing.json"
            with self.assertRaises(ConfigError):
                load_engine_config(missing)
            listed = Path(directory) / "list.json"
            listed.write_text("[1, 2]", encoding="utf-8")
            with self.assertRaises(ConfigError):
                load_engine_config(listed)

    def test_configure_swaps_active(self) -> None:
        replacement = build_config(step_limit=10)
        configure(replacement)
        self.assertEqual(current_config().step_limit, 10)


class LoggingConfigTests(unittest.TestCase):
    def test_json_formatter(self) -> None:
        """
        json 포맷이 python-json-logger 포매터를 쓰고 stderr 로 보내는지 검증합니다.

        @returns {None} 테스트만 수행합니다.
        """
        config = build_logging_config("INFO", "json")
        handler = config["handlers"]["console"]
        self.assertEqual(handler["formatter"], "json")
        self.assertEqual(handler["stream"], "ext://sys.stderr")
        self.assertEqual(config["loggers"]["schublas"]["level"], "INFO")
        self.assertEqual(build_logging_config("DEBUG")["handlers"]["console"]["formatter"], "verbose")


if __name__ == "__main__":
    unittest.main()
