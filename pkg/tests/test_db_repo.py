from pathlib import Path

from alembic import command
from alembic.config import Config
from sqlalchemy import create_engine, inspect

from dibcolor.config import settings
from dibcolor.db_repo.unit_of_work import new_uow

MIGRATIONS = Path(__file__).resolve().parents[1] / "dibcolor" / "db_repo" / "migrations"


def test_catalog_upsert_does_not_duplicate(db_url):
    with new_uow() as uow:
        uow.catalog.upsert(n=3, r=2, d6="&BZ?", dib=2)
        uow.catalog.upsert(n=3, r=2, d6="&BZ?", dib=3)
        uow.catalog.upsert(n=4, r=1, d6="&CQG_", dib=2)

    with new_uow() as uow:
        rows = uow.catalog.list(r=2)
        assert [(e.n, e.d6, e.dib) for e in rows] == [(3, "&BZ?", 3)]
        assert uow.catalog.counts() == {(3, 2, 3): 1, (4, 1, 2): 1}
        assert uow.catalog.get(4, 1, "&CQG_").dib == 2
        assert uow.catalog.get(4, 2, "&CQG_") is None


def test_sweep_runs_recent_newest_first(db_url):
    with new_uow() as uow:
        uow.sweep_runs.create(property="eq1_chain", corpus="digraphs n=1..3", checked=69, counterexamples=0)
        uow.sweep_runs.create(property="thm2_ng", corpus="digraphs n=1..3", checked=69, counterexamples=0,
                              witnesses=["&AW"])

    with new_uow() as uow:
        runs = uow.sweep_runs.recent(10)
        assert [r.property for r in runs] == ["thm2_ng", "eq1_chain"]
        assert runs[0].witnesses == '["&AW"]'
        assert [r.property for r in uow.sweep_runs.recent(10, property="eq1_chain")] == ["eq1_chain"]
        assert len(uow.sweep_runs.recent(1)) == 1


def test_failed_unit_of_work_rolls_back(db_url):
    try:
        with new_uow() as uow:
            uow.catalog.upsert(n=5, r=2, d6="&DSKgc?", dib=3)
            raise RuntimeError("boom")
    except RuntimeError:
        pass
    with new_uow() as uow:
        assert uow.catalog.list() == []


def test_alembic_baseline_matches_models(db_url, monkeypatch):
    cfg = Config()
    cfg.set_main_option("script_location", str(MIGRATIONS))
    command.upgrade(cfg, "head")
    assert {"catalog_entries", "sweep_runs", "alembic_version"} <= set(inspect(create_engine(db_url)).get_table_names())

    monkeypatch.setattr(settings, "USE_ALEMBIC", True)
    with new_uow() as uow:
        uow.catalog.upsert(n=3, r=2, d6="&BZ?", dib=3)
        uow.sweep_runs.create(property="omega_dc", corpus="digraphs n=1..2", checked=5, counterexamples=0)
    with new_uow() as uow:
        assert uow.catalog.counts() == {(3, 2, 3): 1}
        assert uow.sweep_runs.recent(1)[0].created_at is not None
