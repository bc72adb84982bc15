from __future__ import annotations

import logging
import os
import threading
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Union

import orjson
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from schublas.core.common.errors import ConfigError
from schublas.settings import EnvSettings, load_env_settings

logger = logging.getLogger(__name__)


class EngineConfig(BaseModel):
    """계산 엔진 한도와 출력 설정."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    term_limit: int = Field(default=1_000_000, gt=0)
    step_limit: int = Field(default=100_000, gt=0)
    cache_entries: int = Field(default=100_000, gt=0)
    output_format: Literal["json", "text"] = "json"
    parallelism: Union[int, Literal["auto"]] = "auto"

    @field_validator("parallelism")
    @classmethod
    def _positive_parallelism(cls, value: Union[int, str]) -> Union[int, str]:
        if isinstance(value, int) and value <= 0:
            raise ValueError("parallelism must be positive or 'auto'")
        return value

    def thread_count(self) -> int:
        """
        @returns 실제로 사용할 스레드 수. auto면 CPU 수 기준(최대 8).
        """
        if self.parallelism == "auto":
            return max(1, min(8, os.cpu_count() or 1))
        return int(self.parallelism)


def config_from_env(env: Optional[EnvSettings] = None) -> EngineConfig:
    """
    @param env 환경 설정. 없으면 새로 로드합니다.
    @returns 환경변수 기반 EngineConfig.
    """
    env = env or load_env_settings()
    return EngineConfig(
        term_limit=env.SCHUBLAS_TERM_LIMIT,
        step_limit=env.SCHUBLAS_STEP_LIMIT,
        cache_entries=env.SCHUBLAS_CACHE_ENTRIES,
        output_format=env.SCHUBLAS_OUTPUT_FORMAT,
        parallelism=env.SCHUBLAS_THREADS,
    )


def load_engine_config(path: Union[str, Path], base: Optional[EngineConfig] = None) -> EngineConfig:
    """
    JSON 설정 파일을 읽어 기본 설정 위에 덮어씁니다.
    SCHUBLAS_THREADS 환경변수가 있으면 파일의 parallelism보다 우선합니다.

    @param path JSON 설정 파일 경로.
    @param base 덮어쓸 기준 설정.
    @returns 병합된 EngineConfig.
    """
    base = base or config_from_env()
    try:
        payload = orjson.loads(Path(path).read_bytes())
    except (OSError, orjson.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file: {exc}", datum=str(path)) from exc
    if not isinstance(payload, dict):
        raise ConfigError("config file must hold a JSON object", datum=str(path))
    merged: Dict[str, Any] = {**base.model_dump(), **payload}
    if "SCHUBLAS_THREADS" in os.environ:
        merged["parallelism"] = base.parallelism
    return build_config(**merged)


def build_config(**values: Any) -> EngineConfig:
    """
    @param values EngineConfig 필드 값.
    @returns 검증된 EngineConfig.
    """
    try:
        return EngineConfig(**values)
    except ValidationError as exc:
        raise ConfigError(f"invalid engine config: {exc.errors(include_url=False)}") from exc


_lock = threading.Lock()
_active: Optional[EngineConfig] = None


def current_config() -> EngineConfig:
    """
    @returns 프로세스 전역에서 활성화된 설정.
    """
    global _active
    with _lock:
        if _active is None:
            try:
                _active = config_from_env()
            except ValidationError as exc:
                raise ConfigError(f"invalid environment: {exc.errors(include_url=False)}") from exc
        return _active


def configure(config: EngineConfig) -> EngineConfig:
    """
    활성 설정을 교체합니다.

    @param config 새 설정.
    @returns 이전 설정.
    """
    global _active
    with _lock:
        previous = _active or config
        _active = config
    logger.debug("engine config replaced: %s", config.model_dump())
    return previous
