"""Toolkit Configuration Module

This module manages configuration for the density toolkit, including
environment-specific settings, environment-variable overrides and the
validation of a single run request.
"""

from typing import Any, Dict, List, Optional
from dataclasses import dataclass, field
from pathlib import Path
import json
import logging
import logging.config
import os

import yaml
from dotenv import load_dotenv
from marshmallow import EXCLUDE, Schema, ValidationError, fields, validate, validates

from src.atlas.table import GroupKind
from src.errors import ConfigError
from src.field import prime_power

ENV_PREFIX = 'DENSITY_'

GROUP_CHOICES = ('psl', 'pgl', 'both')
LEVEL_CHOICES = ('fast', 'full')


@dataclass
class FieldConfig:
    """Finite field limits"""
    max_order: int = 1000
    table_max_order: int = 4096


@dataclass
class AtlasConfig:
    """Group enumeration and coset action limits"""
    max_group_order: int = 30000
    perm_table_max_order: int = 25000
    chunk_size: int = 256


@dataclass
class DerangeConfig:
    """Derangement graph limits"""
    dense_max_vertices: int = 25000


@dataclass
class CliqueConfig:
    """Exact clique search settings"""
    budget: int = 10 ** 9
    workers: Optional[int] = None


@dataclass
class OutputConfig:
    """Report and export settings"""
    directory: str = 'out'
    dot: bool = True
    edges: bool = True
    witness: bool = True


class FieldConfigSchema(Schema):
    """Schema for field configuration"""
    max_order = fields.Int(validate=validate.Range(min=3))
    table_max_order = fields.Int(validate=validate.Range(min=3))

    class Meta:
        unknown = EXCLUDE


class AtlasConfigSchema(Schema):
    """Schema for atlas configuration"""
    max_group_order = fields.Int(validate=validate.Range(min=6))
    perm_table_max_order = fields.Int(validate=validate.Range(min=6))
    chunk_size = fields.Int(validate=validate.Range(min=1))

    class Meta:
        unknown = EXCLUDE


class DerangeConfigSchema(Schema):
    """Schema for derangement configuration"""
    dense_max_vertices = fields.Int(validate=validate.Range(min=1))

    class Meta:
        unknown = EXCLUDE


class CliqueConfigSchema(Schema):
    """Schema for clique configuration"""
    budget = fields.Int(validate=validate.Range(min=1))
    workers = fields.Int(allow_none=True, validate=validate.Range(min=1))

    class Meta:
        unknown = EXCLUDE


class OutputConfigSchema(Schema):
    """Schema for output configuration"""
    directory = fields.Str()
    dot = fields.Bool()
    edges = fields.Bool()
    witness = fields.Bool()

    class Meta:
        unknown = EXCLUDE


class ToolkitConfig:
    """Toolkit configuration manager"""

    def __init__(
        self,
        config_path: Optional[str] = None,
        env: Optional[str] = None
    ):
        """Initialize toolkit configuration

        Args:
            config_path: Path to config directory
            env: Environment name (dev/test/prod)
        """
        self.logger = logging.getLogger(__name__)
        load_dotenv()
        self.config_path = config_path or os.getenv('DENSITY_CONFIG_PATH', 'config')
        self.env = env or os.getenv('DENSITY_ENV', 'dev')
        self.config: Dict[str, Any] = {}

        self._load_config()

    def get_field_config(self) -> FieldConfig:
        return FieldConfig(**self._section('field', FieldConfigSchema()))

    def get_atlas_config(self) -> AtlasConfig:
        return AtlasConfig(**self._section('atlas', AtlasConfigSchema()))

    def get_derange_config(self) -> DerangeConfig:
        return DerangeConfig(**self._section('derange', DerangeConfigSchema()))

    def get_clique_config(self) -> CliqueConfig:
        return CliqueConfig(**self._section('clique', CliqueConfigSchema()))

    def get_output_config(self) -> OutputConfig:
        return OutputConfig(**self._section('output', OutputConfigSchema()))

    def configure_logging(self) -> None:
        """Apply the `logging` section through dictConfig"""
        settings = self.config.get('logging')
        if not settings:
            logging.basicConfig(level=logging.INFO)
            return
        for handler in settings.get('handlers', {}).values():
            filename = handler.get('filename')
            if filename:
                Path(filename).parent.mkdir(parents=True, exist_ok=True)
        logging.config.dictConfig(settings)

    def _section(self, name: str, schema: Schema) -> Dict[str, Any]:
        try:
            return schema.load(self.config.get(name) or {})
        except ValidationError as e:
            self.logger.error(f"Invalid {name} configuration: {e.messages}")
            raise ConfigError(f"Invalid {name} configuration: {e.messages}") from e

    def _load_config(self) -> None:
        """Load configuration from files and environment"""
        try:
            base_config = self._load_config_file('base')
            env_config = self._load_config_file(self.env)
            self.config = self._merge_configs(base_config, env_config)
            self._override_from_env()

        except Exception as e:
            self.logger.error(f"Failed to load configuration: {str(e)}")
            raise

    def _load_config_file(self, name: str) -> Dict[str, Any]:
        config_file = Path(self.config_path) / f"{name}.yml"

        if not config_file.exists():
            self.logger.warning(f"Config file not found: {config_file}")
            return {}

        try:
            with open(config_file) as f:
                return yaml.safe_load(f) or {}

        except yaml.YAMLError as e:
            self.logger.error(f"Failed to load {name} config: {str(e)}")
            raise ConfigError(f"Malformed config file {config_file}") from e

    def _merge_configs(
        self,
        base: Dict[str, Any],
        override: Dict[str, Any]
    ) -> Dict[str, Any]:
        """Recursively merge `override` into a copy of `base`"""
        result = base.copy()

        for key, value in override.items():
            if (
                key in result and
                isinstance(result[key], dict) and
                isinstance(value, dict)
            ):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value

        return result

    def _override_from_env(self) -> None:
        """Override with DENSITY_<SECTION>_<KEY> variables

        The section name is the first underscore-separated part; the rest is
        the key, so DENSITY_ATLAS_MAX_GROUP_ORDER sets atlas.max_group_order.
        """
        for key, value in os.environ.items():
            if not key.startswith(ENV_PREFIX):
                continue

            section, _, name = key[len(ENV_PREFIX):].lower().partition('_')
            current = self.config.get(section)
            if not name or not isinstance(current, dict):
                continue

            try:
                current[name] = json.loads(value)
            except json.JSONDecodeError:
                current[name] = value


@dataclass
class RunConfig:
    """One validated run request

    Attributes:
        q_list: Field orders, in request order
        group: psl, pgl or both
        budget: Node budget of each clique search
        workers: Solver and graph-building workers
        deterministic: Force one worker
        out: Output directory
        dot: Write DOT files
        edges: Write edge lists
        witness: Write witness files
        level: fast or full verification
    """
    q_list: List[int]
    group: str = 'both'
    budget: int = 10 ** 9
    workers: int = 1
    deterministic: bool = False
    out: str = 'out'
    dot: bool = True
    edges: bool = True
    witness: bool = True
    level: str = 'fast'
    field_config: FieldConfig = field(default_factory=FieldConfig)
    atlas_config: AtlasConfig = field(default_factory=AtlasConfig)
    derange_config: DerangeConfig = field(default_factory=DerangeConfig)

    @property
    def groups(self) -> List[GroupKind]:
        if self.group == 'both':
            return [GroupKind.PSL, GroupKind.PGL]
        return [GroupKind(self.group)]


class RunConfigSchema(Schema):
    """Schema for a run request; q bounds come from the schema context"""
    q_list = fields.List(fields.Int(), required=True, validate=validate.Length(min=1))
    group = fields.Str(validate=validate.OneOf(GROUP_CHOICES))
    budget = fields.Int(validate=validate.Range(min=1))
    workers = fields.Int(validate=validate.Range(min=1))
    deterministic = fields.Bool()
    out = fields.Str()
    dot = fields.Bool()
    edges = fields.Bool()
    witness = fields.Bool()
    level = fields.Str(validate=validate.OneOf(LEVEL_CHOICES))

    class Meta:
        unknown = EXCLUDE

    @validates('q_list')
    def validate_q_list(self, q_list: List[int], **kwargs) -> None:
        max_order = self.context.get('max_order')
        max_group_order = self.context.get('max_group_order')
        for q in q_list:
            if q % 2 == 0:
                raise ValidationError(f"q={q} is even")
            if prime_power(q) is None:
                raise ValidationError(f"q={q} is not a prime power")
            if max_order is not None and q > max_order:
                raise ValidationError(f"q={q} exceeds the configured bound {max_order}")
            if max_group_order is not None and q * (q * q - 1) > max_group_order:
                raise ValidationError(
                    f"PGL(2,{q}) has order {q * (q * q - 1)}, above the configured bound {max_group_order}"
                )


def create_config(
    config_path: Optional[str] = None,
    env: Optional[str] = None
) -> ToolkitConfig:
    """Create toolkit configuration

    Args:
        config_path: Path to config directory
        env: Environment name

    Returns:
        Toolkit configuration object
    """
    return ToolkitConfig(config_path, env)


def build_run_config(toolkit: ToolkitConfig, **request: Any) -> RunConfig:
    """Validate a run request on top of the toolkit defaults

    Args:
        toolkit: Loaded toolkit configuration
        **request: RunConfig fields; None values fall back to the toolkit

    Returns:
        Validated run configuration

    Raises:
        ConfigError: Any q is even, not a prime power, above the field bound,
            or has a group order above the atlas bound
    """
    field_config = toolkit.get_field_config()
    atlas_config = toolkit.get_atlas_config()
    clique_config = toolkit.get_clique_config()
    output_config = toolkit.get_output_config()

    defaults = {
        'budget': clique_config.budget,
        'workers': clique_config.workers or os.cpu_count() or 1,
        'out': output_config.directory,
        'dot': output_config.dot,
        'edges': output_config.edges,
        'witness': output_config.witness,
    }
    data = {**defaults, **{k: v for k, v in request.items() if v is not None}}

    schema = RunConfigSchema()
    schema.context = {
        'max_order': field_config.max_order,
        'max_group_order': atlas_config.max_group_order,
    }
    try:
        validated = schema.load(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid run request: {e.messages}") from e

    if validated.get('deterministic'):
        validated['workers'] = 1

    return RunConfig(
        **validated,
        field_config=field_config,
        atlas_config=atlas_config,
        derange_config=toolkit.get_derange_config(),
    )
