from schublas.core.config.engine_config import (
    EngineConfig,
    build_config,
    config_from_env,
    configure,
    current_config,
    load_engine_config,
)

__all__ = [
    "EngineConfig",
    "build_config",
    "config_from_env",
    "configure",
    "current_config",
    "load_engine_config",
]
