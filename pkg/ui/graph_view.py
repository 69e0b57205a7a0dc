# ui/graph_view.py
"""
Komponen visualisasi graf menggunakan Graphviz (st.graphviz_chart).
"""

import streamlit as st
import pandas as pd
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.graphcore import LabeledGraph, degree_histogram, to_dot

# Warna edge per kind
EDGE_COLORS = {
    'braid': 'red',
    'commutation': 'blue',
    'cover': 'gray30',
}


def styled_dot(G: LabeledGraph) -> str:
    """
    DOT dari to_dot dengan warna per kind edge.

    Args:
        G: LabeledGraph

    Returns:
        DOT string siap dirender
    """
    lines = to_dot(G).splitlines()
    out = [lines[0], '  node [shape=box, fontname="monospace", fontsize=10];']
    for line in lines[1:]:
        for kind, color in EDGE_COLORS.items():
            if f'[label="{kind}"]' in line:
                line = line.replace(f'[label="{kind}"]', f'[color={color}, tooltip="{kind}"]')
                break
        out.append(line)
    return "\n".join(out)


def render_graph(G: LabeledGraph, title: str = None):
    """
    Render graf beserta ringkasannya.

    Args:
        G: LabeledGraph yang ditampilkan
        title: Judul (default nama graf)
    """
    st.markdown(f"### {title or G.name}")

    col1, col2, col3 = st.columns(3)
    with col1:
        st.metric("Vertex", G.order())
    with col2:
        st.metric("Edge", G.size())
    with col3:
        st.metric("Polinomial derajat", degree_histogram(G).to_string('d'))

    if G.order() == 0:
        st.info("Graf kosong.")
        return

    st.graphviz_chart(styled_dot(G), use_container_width=True)

    kinds = G.kind_counts()
    if kinds:
        st.caption(", ".join(f"{kind}: {count}" for kind, count in sorted(kinds.items())))


def render_graph_download(G: LabeledGraph, fmt: str = 'dot'):
    """Tombol unduh DOT atau JSON."""
    from core.graphcore import to_json

    data = to_dot(G) if fmt == 'dot' else to_json(G)
    st.download_button(
        f"Unduh {fmt.upper()}",
        data=data,
        file_name=f"{G.name or 'graph'}.{fmt}",
        mime="text/plain",
        key=f"download_{G.name}_{fmt}",
    )


def render_degree_table(G: LabeledGraph):
    """Tabel derajat per vertex."""
    frame = pd.DataFrame([
        {'vertex': v, 'derajat': G.degree(v), 'payload': G.payload(v) or '-'}
        for v in G.vertices
    ])
    st.dataframe(frame, use_container_width=True, hide_index=True)
