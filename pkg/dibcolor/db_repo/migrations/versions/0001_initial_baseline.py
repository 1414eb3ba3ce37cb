from alembic import op
import sqlalchemy as sa
revision = "0001_initial_baseline"
down_revision = None
branch_labels = None
depends_on = None


def upgrade():
    op.create_table(
        "catalog_entries",
        sa.Column("id", sa.Integer(), primary_key=True),
        sa.Column("n", sa.SmallInteger(), nullable=False),
        sa.Column("r", sa.SmallInteger(), nullable=False),
        sa.Column("dib", sa.SmallInteger(), nullable=False),
        sa.Column("d6", sa.String(length=64), nullable=False),
        sa.Column("created_at", sa.DateTime(timezone=True), server_default=sa.func.now(), nullable=False),
        sa.UniqueConstraint("n", "r", "d6", name="uq_catalog_n_r_d6"),
    )
    op.create_table(
        "sweep_runs",
        sa.Column("id", sa.Integer(), primary_key=True),
        sa.Column("property", sa.String(length=64), nullable=False),
        sa.Column("corpus", sa.String(length=128), nullable=False),
        sa.Column("checked", sa.Integer(), nullable=False),
        sa.Column("counterexamples", sa.Integer(), nullable=False),
        sa.Column("witnesses", sa.Text(), nullable=False),
        sa.Column("created_at", sa.DateTime(timezone=True), server_default=sa.func.now(), nullable=False),
    )


def downgrade():
    op.drop_table("sweep_runs")
    op.drop_table("catalog_entries")
