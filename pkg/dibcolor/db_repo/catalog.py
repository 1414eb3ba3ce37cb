from typing import Optional, Sequence

from sqlalchemy import func, select
from sqlalchemy.orm import Session

from .base import BaseRepo
from .models import CatalogEntry


class CatalogRepo(BaseRepo):
    def __init__(self, session: Session) -> None:
        super().__init__(session)

    def get(self, n: int, r: int, d6: str) -> Optional[CatalogEntry]:
        q = select(CatalogEntry).where(CatalogEntry.n == n, CatalogEntry.r == r, CatalogEntry.d6 == d6)
        return self.session.execute(q).scalar_one_or_none()

    def upsert(self, *, n: int, r: int, d6: str, dib: int) -> CatalogEntry:
        """Повторный прогон обновляет dib, не дублируя строку."""
        entry = self.get(n, r, d6)
        if entry is None:
            return self.add(CatalogEntry(n=n, r=r, d6=d6, dib=dib))
        entry.dib = dib
        self.session.flush()
        return entry

    def list(self, *, n: Optional[int] = None, r: Optional[int] = None, dib: Optional[int] = None) -> Sequence[CatalogEntry]:
        q = select(CatalogEntry)
        if n is not None:
            q = q.where(CatalogEntry.n == n)
        if r is not None:
            q = q.where(CatalogEntry.r == r)
        if dib is not None:
            q = q.where(CatalogEntry.dib == dib)
        q = q.order_by(CatalogEntry.n, CatalogEntry.r, CatalogEntry.d6)
        return self.session.execute(q).scalars().all()

    def counts(self) -> dict[tuple[int, int, int], int]:
        q = (
            select(CatalogEntry.n, CatalogEntry.r, CatalogEntry.dib, func.count())
            .group_by(CatalogEntry.n, CatalogEntry.r, CatalogEntry.dib)
            .order_by(CatalogEntry.n, CatalogEntry.r, CatalogEntry.dib)
        )
        return {(n, r, dib): c for n, r, dib, c in self.session.execute(q).all()}
