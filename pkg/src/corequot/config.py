"""Configuration: defaults, optional YAML file and environment overrides."""

import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml

from .exceptions import ConfigError

THREADS_ENV = "COREQUOT_THREADS"
CONFIG_ENV = "COREQUOT_CONFIG"


@dataclass
class VerifySettings:
    max_size: int = 10
    max_degree: int = 40
    order: int = 80
    max_r: int = 3
    max_n: int = 6
    vertex_degree: int = 10


@dataclass
class Settings:
    verify: VerifySettings = field(default_factory=VerifySettings)
    output_format: str = "pretty"
    output_directory: str = "./reports"
    database_path: str = "./reports/corequot.db"
    log_level: str = "WARNING"
    threads: int = 1


def _expand_env(value: Any, env: Mapping[str, str]) -> Any:
    # ${VAR} placeholders are read from the environment
    if isinstance(value, str) and value.startswith("${") and value.endswith("}"):
        name = value[2:-1]
        if name not in env:
            raise ConfigError(f"Environment variable not set: {name}")
        return env[name]
    if isinstance(value, dict):
        return {k: _expand_env(v, env) for k, v in value.items()}
    return value


def _positive_int(value: Any, name: str) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be a positive integer, got {value!r}") from None
    if number < 1:
        raise ConfigError(f"{name} must be a positive integer, got {value!r}")
    return number


def _non_negative_int(value: Any, name: str) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be a non-negative integer, got {value!r}") from None
    if number < 0:
        raise ConfigError(f"{name} must be a non-negative integer, got {value!r}")
    return number


def _load_yaml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise ConfigError(f"Config file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must contain a mapping")
    return data


def load_settings(path: Optional[str] = None, env: Optional[Mapping[str, str]] = None) -> Settings:
    """Build Settings from defaults, an optional YAML file and COREQUOT_THREADS."""
    env = os.environ if env is None else env
    settings = Settings()

    path = path or env.get(CONFIG_ENV)
    if path:
        data = _expand_env(_load_yaml(Path(path)), env)

        verify = data.get("verify") or {}
        known = {f.name for f in fields(VerifySettings)}
        for key, value in verify.items():
            if key not in known:
                raise ConfigError(f"Unknown verify setting: {key}")
            setattr(settings.verify, key, _non_negative_int(value, f"verify.{key}"))

        output = data.get("output") or {}
        if "format" in output:
            if output["format"] not in ("pretty", "json"):
                raise ConfigError(f"output.format must be pretty or json, got {output['format']!r}")
            settings.output_format = output["format"]
        settings.output_directory = str(output.get("directory", settings.output_directory))

        database = data.get("database") or {}
        settings.database_path = str(database.get("path", settings.database_path))

        logging_cfg = data.get("logging") or {}
        settings.log_level = str(logging_cfg.get("level", settings.log_level)).upper()

        if "threads" in data:
            settings.threads = _positive_int(data["threads"], "threads")

    if env.get(THREADS_ENV) is not None:
        settings.threads = _positive_int(env[THREADS_ENV], THREADS_ENV)

    return settings
