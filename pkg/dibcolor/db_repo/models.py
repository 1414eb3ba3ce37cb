from __future__ import annotations

from datetime import datetime

from sqlalchemy import DateTime, Integer, SmallInteger, String, Text, UniqueConstraint, func
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


class Base(DeclarativeBase):
    pass


class CatalogEntry(Base):
    """Канонический r-регулярный орграф и его dib."""

    __tablename__ = "catalog_entries"

    id: Mapped[int] = mapped_column(primary_key=True)
    n: Mapped[int] = mapped_column(SmallInteger)
    r: Mapped[int] = mapped_column(SmallInteger)
    dib: Mapped[int] = mapped_column(SmallInteger)
    d6: Mapped[str] = mapped_column(String(64))
    created_at: Mapped[datetime] = mapped_column(DateTime(timezone=True), server_default=func.now())

    __table_args__ = (
        UniqueConstraint("n", "r", "d6", name="uq_catalog_n_r_d6"),
    )


class SweepRun(Base):
    __tablename__ = "sweep_runs"

    id: Mapped[int] = mapped_column(primary_key=True)
    property: Mapped[str] = mapped_column(String(64))
    corpus: Mapped[str] = mapped_column(String(128))
    checked: Mapped[int] = mapped_column(Integer)
    counterexamples: Mapped[int] = mapped_column(Integer)
    witnesses: Mapped[str] = mapped_column(Text, default="[]")  # JSON-массив digraph6
    created_at: Mapped[datetime] = mapped_column(DateTime(timezone=True), server_default=func.now())
