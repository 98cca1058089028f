"""
Configuration management for the hereditas workbench
"""
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Try to load environment variables from .env file
try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:
    # If dotenv is not available, just continue
    pass


_SETTINGS = SettingsConfigDict(env_prefix="HEREDITAS_", extra="ignore")


class ArithmeticConfig(BaseSettings):
    """Exact arithmetic limits"""

    model_config = _SETTINGS

    # Largest bit length any intermediate integer may reach
    max_entry_bits: int = Field(default=4096, ge=16)


class ResolutionConfig(BaseSettings):
    """Resolution settings"""

    model_config = _SETTINGS

    pd_cap: int = Field(default=16, ge=1)


class SearchConfig(BaseSettings):
    """Defaults for bounded searches and property tests"""

    model_config = SettingsConfigDict(env_prefix="HEREDITAS_SEARCH_", extra="ignore")

    seed: int = 0
    jobs: int = Field(default=1, ge=1)
    exhaustive_limit: int = Field(default=200_000, ge=1)
    samples: int = Field(default=200, ge=1)
    entry_bound: int = Field(default=10, ge=1)
    trials: int = Field(default=100, ge=1)


class LoggingConfig(BaseSettings):
    """Logging configuration"""

    model_config = SettingsConfigDict(env_prefix="HEREDITAS_LOG_", extra="ignore")

    level: str = "INFO"
    file: Optional[str] = None


class Config:
    """Main configuration class"""

    def __init__(self):
        self.arithmetic = ArithmeticConfig()
        self.resolution = ResolutionConfig()
        self.search = SearchConfig()
        self.logging = LoggingConfig()

    def reload(self) -> None:
        """Re-read every section from the environment"""
        self.__init__()


# Global configuration instance
config = Config()
