"""
Chart Builders
==============

Pure functions that turn results into plotly figures. Pages only call
st.plotly_chart on what these return, so the figures can be tested
without a running Streamlit server.

Functions:
    - trace_figure: Length profile of a Whitehead reduction
    - occurrences_figure: x_i / x_i^-1 counts per generator in S_min
    - campaign_figure: Greedy versus oracle minimum over a campaign
    - models_figure: Orbit sizes of the model classes of one genus
"""

import pandas as pd
import plotly.express as px
import plotly.graph_objects as go

from models.model_class import ModelClass
from models.verdict import Verdict
from models.whitehead_move import ReductionTrace

_MARGIN = dict(t=40, b=20, l=20, r=20)


def trace_figure(trace: ReductionTrace) -> go.Figure:
    lengths = trace.lengths
    df = pd.DataFrame({"step": list(range(len(lengths))), "length": lengths})
    fig = px.line(df, x="step", y="length", markers=True, title="Algebraic Length per Reduction Step",
                  labels={"step": "Step", "length": "Length"})
    fig.update_xaxes(dtick=1)
    fig.update_layout(margin=_MARGIN)
    return fig


def occurrences_figure(v: Verdict) -> go.Figure:
    rows = []
    for i in range(1, v.occurrences.genus + 1):
        rows.append({"generator": f"x{i}", "letter": "x_i", "count": v.occurrences.positive(i)})
        rows.append({"generator": f"x{i}", "letter": "x_i^-1", "count": v.occurrences.negative(i)})
    df = pd.DataFrame(rows, columns=["generator", "letter", "count"])
    fig = px.bar(df, x="generator", y="count", color="letter", barmode="group",
                 title="Letter Occurrences in S_min")
    # condition (A) allows at most one of each
    fig.add_hline(y=1, line_dash="dot")
    fig.update_layout(margin=_MARGIN)
    return fig


def campaign_figure(df: pd.DataFrame) -> go.Figure:
    fig = px.scatter(
        df,
        x="oracle_length",
        y="greedy_length",
        color="certified",
        hover_data=["case", "genus", "words", "visited"],
        title="Greedy versus Oracle Minimum",
        labels={"oracle_length": "Oracle Minimum", "greedy_length": "Greedy Minimum"},
    )
    top = int(max(df["greedy_length"].max(), df["oracle_length"].max())) if len(df) else 1
    fig.add_trace(go.Scatter(x=[0, top], y=[0, top], mode="lines", name="equal",
                             line=dict(dash="dot")))
    fig.update_layout(margin=_MARGIN)
    return fig


def models_figure(classes: list[ModelClass]) -> go.Figure:
    df = pd.DataFrame(
        [{"class": str(m) if not m.is_empty else "(empty)", "orbit_size": m.orbit_size,
          "generators_used": m.generators_used} for m in classes],
        columns=["class", "orbit_size", "generators_used"],
    )
    fig = px.bar(df, x="class", y="orbit_size", color="generators_used",
                 title="Orbit Size per Model Class",
                 labels={"class": "Class", "orbit_size": "Orbit Size", "generators_used": "Generators"})
    fig.update_layout(margin=_MARGIN)
    return fig
