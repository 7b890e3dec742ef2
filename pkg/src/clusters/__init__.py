from src.clusters.chart import (
    Chart,
    chart,
    chart_row_sums,
    ordered_subsets,
    preclusters_per_length,
    subset_label,
)
from src.clusters.minimal import minimal_cluster_gf, mu_coefficient_poly
from src.clusters.precluster import (
    ColumnKind,
    PreCluster,
    SymbolicCluster,
    cluster_word,
    column_heights,
    column_kinds,
    enumerate_preclusters,
    enumerate_preclusters_by_length,
    iter_symbolic_clusters,
    symbolic_cluster,
)
