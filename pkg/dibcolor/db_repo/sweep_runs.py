import json
from typing import Optional, Sequence

from sqlalchemy import desc, select
from sqlalchemy.orm import Session

from .base import BaseRepo
from .models import SweepRun


class SweepRunsRepo(BaseRepo):
    def __init__(self, session: Session) -> None:
        super().__init__(session)

    def create(
        self,
        *,
        property: str,
        corpus: str,
        checked: int,
        counterexamples: int,
        witnesses: Sequence[str] = (),
    ) -> SweepRun:
        run = SweepRun(
            property=property,
            corpus=corpus,
            checked=checked,
            counterexamples=counterexamples,
            witnesses=json.dumps(list(witnesses)),
        )
        return self.add(run)

    def recent(self, limit: int = 20, property: Optional[str] = None) -> Sequence[SweepRun]:
        q = select(SweepRun)
        if property is not None:
            q = q.where(SweepRun.property == property)
        q = q.order_by(desc(SweepRun.id)).limit(limit)
        return self.session.execute(q).scalars().all()
