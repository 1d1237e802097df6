"""Configuration management for the blocks toolkit."""

from dataclasses import dataclass, field
from logging.handlers import RotatingFileHandler
from pathlib import Path
import logging
import os
import json


@dataclass
class SearchConfig:
    """Bounds for exhaustive searches and oracles."""
    closure_bound: int = 14
    brute_force_max_rank: int = 8
    certificate_max_n: int = 60


@dataclass
class OutputConfig:
    """Rendering and serialization settings."""
    json_indent: int | None = None
    labels: str = "geometric"
    svg_size: float = 6.0
    projection_margin: int = 2


@dataclass
class LoggingConfig:
    """Logging configuration."""
    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file_path: str | None = None
    max_file_size_mb: int = 10
    backup_count: int = 5


@dataclass
class BlocksConfig:
    """Main configuration for the blocks toolkit."""
    search: SearchConfig = field(default_factory=SearchConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    # Global settings
    debug_mode: bool = False
    version: str = "1.0.0"

    @classmethod
    def from_file(cls, path: str) -> 'BlocksConfig':
        """Load configuration from a JSON file."""
        config_path = Path(path)
        if not config_path.exists():
            return cls()

        with open(config_path) as f:
            data = json.load(f)

        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: dict) -> 'BlocksConfig':
        """Create configuration from dictionary."""
        config = cls()

        for section in ('search', 'output', 'logging'):
            if section in data:
                target = getattr(config, section)
                for key, value in data[section].items():
                    if hasattr(target, key):
                        setattr(target, key, value)

        if 'debug_mode' in data:
            config.debug_mode = data['debug_mode']
        if 'version' in data:
            config.version = data['version']

        return config

    @classmethod
    def from_env(cls) -> 'BlocksConfig':
        """Load configuration from environment variables."""
        config = cls()

        # Search
        if 'BRAUER_CLOSURE_BOUND' in os.environ:
            config.search.closure_bound = int(os.environ['BRAUER_CLOSURE_BOUND'])
        if 'BRAUER_BRUTE_FORCE_MAX_RANK' in os.environ:
            config.search.brute_force_max_rank = int(os.environ['BRAUER_BRUTE_FORCE_MAX_RANK'])
        if 'BRAUER_CERT_MAX_N' in os.environ:
            config.search.certificate_max_n = int(os.environ['BRAUER_CERT_MAX_N'])

        # Output
        if 'BRAUER_LABELS' in os.environ:
            config.output.labels = os.environ['BRAUER_LABELS']

        # Logging
        if 'BRAUER_LOG_LEVEL' in os.environ:
            config.logging.level = os.environ['BRAUER_LOG_LEVEL']
        if 'BRAUER_LOG_FILE' in os.environ:
            config.logging.file_path = os.environ['BRAUER_LOG_FILE']

        # Global
        if 'BRAUER_DEBUG' in os.environ:
            config.debug_mode = os.environ['BRAUER_DEBUG'].lower() in ('true', '1', 'yes')

        return config

    def to_dict(self) -> dict:
        """Convert configuration to dictionary."""
        return {
            'search': {
                'closure_bound': self.search.closure_bound,
                'brute_force_max_rank': self.search.brute_force_max_rank,
                'certificate_max_n': self.search.certificate_max_n
            },
            'output': {
                'json_indent': self.output.json_indent,
                'labels': self.output.labels,
                'svg_size': self.output.svg_size,
                'projection_margin': self.output.projection_margin
            },
            'logging': {
                'level': self.logging.level,
                'format': self.logging.format,
                'file_path': self.logging.file_path,
                'max_file_size_mb': self.logging.max_file_size_mb,
                'backup_count': self.logging.backup_count
            },
            'debug_mode': self.debug_mode,
            'version': self.version
        }

    def save(self, path: str):
        """Save configuration to a JSON file."""
        with open(path, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)

    def validate(self) -> list[str]:
        """Validate configuration and return any errors."""
        errors = []

        # Search validation
        if self.search.closure_bound < 1:
            errors.append("Search closure_bound must be at least 1")
        if self.search.brute_force_max_rank < 1:
            errors.append("Search brute_force_max_rank must be at least 1")
        if self.search.certificate_max_n < 2:
            errors.append("Search certificate_max_n must be at least 2")

        # Output validation
        if self.output.labels not in ("geometric", "transpose"):
            errors.append("Output labels must be 'geometric' or 'transpose'")
        if self.output.svg_size <= 0:
            errors.append("Output svg_size must be positive")
        if self.output.projection_margin < 0:
            errors.append("Output projection_margin cannot be negative")

        # Logging validation
        if not isinstance(logging.getLevelName(self.logging.level.upper()), int):
            errors.append(f"Logging level '{self.logging.level}' is not recognised")
        if self.logging.max_file_size_mb < 1:
            errors.append("Logging max_file_size_mb must be at least 1")

        return errors


def configure_logging(config: LoggingConfig) -> logging.Logger:
    """Attach handlers described by the config to the package logger."""
    logger = logging.getLogger("src")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(config.format)
    stream = logging.StreamHandler()
    stream.setFormatter(formatter)
    logger.addHandler(stream)

    if config.file_path:
        rotating = RotatingFileHandler(
            config.file_path,
            maxBytes=config.max_file_size_mb * 1024 * 1024,
            backupCount=config.backup_count
        )
        rotating.setFormatter(formatter)
        logger.addHandler(rotating)

    logger.setLevel(config.level.upper())
    logger.propagate = False
    return logger


# Global configuration instance
_config: BlocksConfig | None = None


def get_config() -> BlocksConfig:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = BlocksConfig.from_env()
    return _config


def set_config(config: BlocksConfig):
    """Set the global configuration instance."""
    global _config
    _config = config


def load_config(path: str) -> BlocksConfig:
    """Load configuration from file and set as global."""
    global _config
    _config = BlocksConfig.from_file(path)
    return _config
