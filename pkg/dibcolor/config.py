# dibcolor/config.py
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    # === LOGGING ===
    LOG_LEVEL: str = "INFO"

    # === CATALOG STORE ===
    DATABASE_URL: str = "sqlite:///dibcolor.db"
    USE_ALEMBIC: bool = False        # False -> create_all при первом обращении

    # === SEARCH ===
    THREADS: int = 1
    CANON_MAX_N: int = 8             # потолок canonical_form
    ENUM_MAX_N: int = 8              # потолок перебора с точностью до изоморфизма

    # === SWEEPS ===
    SWEEP_MAX_N_DIGRAPHS: int = 4
    SWEEP_MAX_N_TOURNAMENTS: int = 6
    SWEEP_WITNESS_LIMIT: int = 5      # сколько свидетелей равенства и контрпримеров хранит отчёт

    # === GENERATORS ===
    REGULAR_RETRIES: int = 500

    SHOW_PROGRESS: bool = False

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="DIBCOLOR_",
        extra="ignore",  # чтобы не падало, если есть лишние переменные
    )

settings = Settings()
