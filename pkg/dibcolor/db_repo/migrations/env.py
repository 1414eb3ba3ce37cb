from __future__ import annotations

import sys
from logging.config import fileConfig
from pathlib import Path

from alembic import context

ROOT = Path(__file__).resolve().parents[3]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from dibcolor.config import settings  # noqa: E402
from dibcolor.db_repo.base import get_engine  # noqa: E402
from dibcolor.db_repo.models import Base  # noqa: E402

config = context.config
if config.config_file_name is not None:
    fileConfig(config.config_file_name, disable_existing_loggers=False)

target_metadata = Base.metadata


def catalog_url() -> str:
    # `alembic -x url=sqlite:///other.db upgrade head` перекрывает DIBCOLOR_DATABASE_URL
    return context.get_x_argument(as_dictionary=True).get("url") or settings.DATABASE_URL


def upgrade_offline() -> None:
    context.configure(
        url=catalog_url(),
        target_metadata=target_metadata,
        literal_binds=True,
        dialect_opts={"paramstyle": "named"},
        render_as_batch=True,
    )
    with context.begin_transaction():
        context.run_migrations()


def upgrade_online() -> None:
    # тот же engine, что и у репозиториев: sqlite-файл открывается один раз на процесс
    with get_engine(catalog_url()).begin() as connection:
        context.configure(
            connection=connection,
            target_metadata=target_metadata,
            compare_type=True,
            render_as_batch=True,  # ALTER в sqlite только через пересоздание таблицы
        )
        with context.begin_transaction():
            context.run_migrations()


if context.is_offline_mode():
    upgrade_offline()
else:
    upgrade_online()
