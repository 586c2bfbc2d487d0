"""Actor-centred clustering of moves in a five-dimensional orientation space."""
from .catalog import (Catalog, Move, MoveSpec, generate_synthetic_catalog,
                      instantiate_catalog, parse_catalog, serialize_catalog)
from .cluster import Centroid, Cluster, ClusterMember, build_cluster, format_cluster_report, primary_type
from .errors import (CatalogParseError, ClusterSizeError, CogSciKError, DomainError,
                     ExhaustionError, InstantiationError, InvalidWeightError)
from .io_space import (IOClass, IOClassBounds, IOClassVector, IODimension, IOVector,
                       bounds_of, classify, classify_vector, sample_io)
from .kernel import BACKEND, WeightVector, euclidean_distance, weighted_distance
from .kmeans import KMeansResult, cluster_type_summary, kmeans
from .seeding import make_rng, substream
from .simulation import (Actor, Nearest, Random, Scripted, SimulationConfig, TickRecord, Trace,
                         run, step)

__version__ = "0.1.0"
