"""
Jordanian Configuration
=======================

Verification settings and CLI command models.

Settings are resolved in this order (later wins):
1. Field defaults
2. YAML file (``--config``)
3. ``JORDANIAN_*`` environment variables (``.env`` is loaded first)
4. Explicit overrides (CLI flags)
"""

from pathlib import Path
from typing import Any, Dict, Literal, Mapping, Optional, Union
import logging
import os

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .exceptions import ConfigException


logger = logging.getLogger('jordanian.config')

ENV_PREFIX = 'JORDANIAN_'

SUITE_NAMES = (
    'ybe', 'braid', 'unitarity', 'char-eq', 'specialize', 'hopf',
    'quasitriangular', 'classical', 'rtt', 'determinant',
)

EMIT_TARGETS = ('r-matrix', 'braid', 'universal-r', 'representation', 'relations', 'determinant')


class VerificationSettings(BaseModel):
    """Tunable limits and witness points for verification runs"""

    model_config = ConfigDict(extra='forbid', validate_assignment=True)

    max_sector_dim: int = Field(4096, ge=1, description="Largest word sector eliminated")
    rank_guard_points: int = Field(3, ge=0, description="Random rational points for the rank guard and the degree-4 determinant check")
    guard_seed: int = Field(20240229, description="Seed of the rank guard point generator")
    guard_max_dim: int = Field(256, ge=0, description="Largest sector re-checked by the rank guard")
    hecke_witness: Dict[str, str] = Field(
        default_factory=lambda: {'h': '1', 's': '1', 'lambda': '1', 'mu': '2'},
        description="Point with distinct colours where the Hecke condition fails"
    )
    centrality_witness: Dict[str, str] = Field(
        default_factory=lambda: {'h': '1', 's': '1', 'lambda': '1', 'mu': '2'},
        description="Point where [D_lambda, a_mu] is shown not to vanish"
    )
    workers: int = Field(1, ge=1, description="Suites run concurrently")
    nilpotency_bound: Optional[int] = Field(None, ge=1, description="Override for nilpotent_exp")

    @field_validator('hecke_witness', 'centrality_witness', mode='before')
    @classmethod
    def _witness_keys(cls, value: Any) -> Dict[str, str]:
        if not isinstance(value, dict):
            raise ValueError('witness point must be a mapping')
        missing = {'h', 's', 'lambda', 'mu'} - set(value)
        if missing:
            raise ValueError(f"witness point misses {sorted(missing)}")
        return {k: str(v) for k, v in value.items()}


class CommandConfig(BaseModel):
    """One CLI invocation, validated before any computation"""

    model_config = ConfigDict(extra='forbid')

    command: Literal['emit', 'verify', 'report']
    target: str
    colours: Dict[str, str] = Field(default_factory=dict)
    at: Dict[str, str] = Field(default_factory=dict)
    format: Literal['json', 'latex', 'plain'] = 'plain'
    output: Optional[Path] = None

    @field_validator('target')
    @classmethod
    def _known_target(cls, value: str, info) -> str:
        command = info.data.get('command')
        if command == 'emit' and value not in EMIT_TARGETS:
            raise ValueError(f"unknown emit target '{value}' (choose from {', '.join(EMIT_TARGETS)})")
        if command == 'verify' and value not in SUITE_NAMES + ('all',):
            raise ValueError(f"unknown suite '{value}' (choose from {', '.join(SUITE_NAMES + ('all',))})")
        return value


def _read_yaml(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigException(f"Cannot read settings file: {e}", {'path': str(path)})
    if not isinstance(data, dict):
        raise ConfigException("Settings file must contain a mapping", {'path': str(path)})
    return data


def _read_environment() -> Dict[str, Any]:
    values: Dict[str, Any] = {}
    for name in VerificationSettings.model_fields:
        raw = os.environ.get(ENV_PREFIX + name.upper())
        if raw is None:
            continue
        # YAML scalars: "8" -> 8, "true" -> True, "{h: 1}" -> dict
        values[name] = yaml.safe_load(raw)
    return values


def load_settings(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, Any]] = None
) -> VerificationSettings:
    """
    Resolve verification settings

    Args:
        path: Optional YAML settings file
        overrides: Explicit values (None entries are ignored)

    Returns:
        VerificationSettings: Validated settings

    Raises:
        ConfigException: unreadable file or invalid value
    """
    load_dotenv()

    data: Dict[str, Any] = {}
    if path is not None:
        data.update(_read_yaml(path))
        logger.debug(f"Settings file loaded: {path}")
    data.update(_read_environment())
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        return VerificationSettings(**data)
    except ValidationError as e:
        raise ConfigException(f"Invalid settings: {e.errors()[0]['msg']}", {'errors': e.errors(include_url=False)})
