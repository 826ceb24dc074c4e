from .heatmap import clamp_neg_inf, read_pgm, shared_scale, to_gray, write_pgm
from .pipeline import frequency_split_variance, get_reconstruct_status, ground_truth_pmi, process_reconstruct
from .svd import EmbeddingSet, embed, jacobi_svd, reconstruct, truncated_svd, write_embeddings_csv

__all__ = [
    'EmbeddingSet',
    'clamp_neg_inf',
    'embed',
    'frequency_split_variance',
    'get_reconstruct_status',
    'ground_truth_pmi',
    'jacobi_svd',
    'process_reconstruct',
    'read_pgm',
    'reconstruct',
    'shared_scale',
    'to_gray',
    'truncated_svd',
    'write_embeddings_csv',
    'write_pgm',
]
