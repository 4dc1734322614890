# src/core/config.py
from functools import lru_cache

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

class Settings(BaseSettings):
    # Project Information
    PROJECT_NAME: str = "hnfsub"
    VERSION: str = "0.1.0"
    DEBUG: bool = False

    # Field Settings
    DEFAULT_MODULUS: int = 2147483647
    DEFAULT_SEED: int = 0

    # Polynomial Arithmetic
    KARATSUBA_THRESHOLD: int = 32
    SUBPRODUCT_THRESHOLD: int = 16

    # Structured Solver Settings
    SAMPLE_SIZE_FACTOR: int = 8
    SOLVER_WORKERS: int = 1
    INVERSION_BACKEND: str = "dense"
    GENERATOR_GROWTH: int = 2

    # Bench Settings
    BENCH_REPEATS: int = 3

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True
    )

@lru_cache()
def get_settings() -> Settings:
    return Settings()
