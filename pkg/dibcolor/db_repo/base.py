# dibcolor/db_repo/base.py
from functools import lru_cache
from typing import Any

from sqlalchemy import Engine, create_engine
from sqlalchemy.orm import Session, sessionmaker

from dibcolor.config import settings


# ---------- Engine + фабрика сессий ----------
@lru_cache(maxsize=None)
def _engine(url: str) -> Engine:
    return create_engine(url, echo=False, future=True)


def get_engine(url: str | None = None) -> Engine:
    # URL читается при каждом вызове: настройки могут смениться после импорта
    return _engine(url or settings.DATABASE_URL)


def session_factory(url: str | None = None) -> sessionmaker[Session]:
    return sessionmaker(get_engine(url), expire_on_commit=False)


def init_db_if_needed(url: str | None = None) -> None:
    from .models import Base

    if not settings.USE_ALEMBIC:
        Base.metadata.create_all(get_engine(url))


# ---------- Базовый репозиторий ----------
class BaseRepo:
    def __init__(self, session: Session) -> None:
        self.session = session

    def add(self, obj: Any) -> Any:
        self.session.add(obj)
        self.session.flush()
        return obj

