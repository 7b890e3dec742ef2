from src.genfun.cluster_method import avoidance_gf, cluster_gf, full_gf
from src.genfun.transforms import plus_transform, prepend_transform, unplus_transform
