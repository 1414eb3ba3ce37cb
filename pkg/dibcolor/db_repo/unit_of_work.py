# dibcolor/db_repo/unit_of_work.py
from contextlib import contextmanager
from typing import Iterator

from sqlalchemy.orm import Session

from .base import init_db_if_needed, session_factory
from .catalog import CatalogRepo
from .sweep_runs import SweepRunsRepo


class UnitOfWork:
    def __init__(self, session: Session) -> None:
        self.session = session
        self.catalog = CatalogRepo(session)
        self.sweep_runs = SweepRunsRepo(session)

    def commit(self) -> None:
        self.session.commit()

    def rollback(self) -> None:
        self.session.rollback()


@contextmanager
def new_uow(url: str | None = None) -> Iterator[UnitOfWork]:
    init_db_if_needed(url)
    with session_factory(url)() as session:
        uow = UnitOfWork(session)
        try:
            yield uow
            uow.commit()
        except Exception:
            uow.rollback()
            raise
