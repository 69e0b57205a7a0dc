from .layout import render_main_layout
from .result_table import render_result_table
from .graph_view import render_graph
from .metrics_view import render_family_metrics, render_check_results
