"""Plain-torch node-classification models.

Four message-passing architectures (GCN, GraphSAGE, GAT, APPNP) plus the
MLP baseline, all operating on a shared precomputed graph context so a
bundle is converted to tensors once per training run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import torch
from torch import nn


@dataclass
class GraphTensors:
    """Tensors shared by every model for one dataset."""

    x: torch.Tensor            # (n, d) features
    y: torch.Tensor            # (n,) labels
    adj_norm: torch.Tensor     # sparse sym-normalized adjacency with self loops
    adj_mean: torch.Tensor     # sparse row-normalized adjacency (no self loops)
    edge_src: torch.Tensor     # directed edge list incl. self loops (for GAT)
    edge_dst: torch.Tensor


def build_graph_tensors(edges: np.ndarray, features: np.ndarray, labels: np.ndarray) -> GraphTensors:
    n = len(labels)
    if len(edges):
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
    else:
        src = np.empty(0, dtype=np.int64)
        dst = np.empty(0, dtype=np.int64)

    loop = np.arange(n)
    src_l = np.concatenate([src, loop])
    dst_l = np.concatenate([dst, loop])

    deg_l = np.bincount(dst_l, minlength=n).astype(np.float64)
    inv_sqrt = 1.0 / np.sqrt(deg_l)
    values = inv_sqrt[src_l] * inv_sqrt[dst_l]
    adj_norm = torch.sparse_coo_tensor(
        torch.tensor(np.stack([dst_l, src_l])), torch.tensor(values, dtype=torch.float32),
        size=(n, n), check_invariants=False,
    ).coalesce()

    deg = np.maximum(np.bincount(dst, minlength=n), 1).astype(np.float64)
    mean_vals = 1.0 / deg[dst]
    adj_mean = torch.sparse_coo_tensor(
        torch.tensor(np.stack([dst, src])), torch.tensor(mean_vals, dtype=torch.float32),
        size=(n, n), check_invariants=False,
    ).coalesce()

    return GraphTensors(
        x=torch.tensor(features, dtype=torch.float32),
        y=torch.tensor(labels, dtype=torch.long),
        adj_norm=adj_norm,
        adj_mean=adj_mean,
        edge_src=torch.tensor(src_l, dtype=torch.long),
        edge_dst=torch.tensor(dst_l, dtype=torch.long),
    )


class Mlp(nn.Module):
    def __init__(self, in_dim, hidden, classes):
        super().__init__()
        self.net = nn.Sequential(nn.Linear(in_dim, hidden), nn.ReLU(), nn.Linear(hidden, classes))

    def forward(self, g: GraphTensors):
        return self.net(g.x)


class Gcn(nn.Module):
    """Two graph-convolution layers over the sym-normalized adjacency."""

    def __init__(self, in_dim, hidden, classes):
        super().__init__()
        self.lin1 = nn.Linear(in_dim, hidden)
        self.lin2 = nn.Linear(hidden, classes)

    def forward(self, g: GraphTensors):
        h = torch.relu(torch.sparse.mm(g.adj_norm, self.lin1(g.x)))
        return torch.sparse.mm(g.adj_norm, self.lin2(h))


class GraphSage(nn.Module):
    """Mean-aggregator SAGE: separate self and neighborhood transforms."""

    def __init__(self, in_dim, hidden, classes):
        super().__init__()
        self.self1 = nn.Linear(in_dim, hidden)
        self.neigh1 = nn.Linear(in_dim, hidden)
        self.self2 = nn.Linear(hidden, classes)
        self.neigh2 = nn.Linear(hidden, classes)

    def forward(self, g: GraphTensors):
        agg = torch.sparse.mm(g.adj_mean, g.x)
        h = torch.relu(self.self1(g.x) + self.neigh1(agg))
        agg = torch.sparse.mm(g.adj_mean, h)
        return self.self2(h) + self.neigh2(agg)


class GatLayer(nn.Module):
    def __init__(self, in_dim, out_dim, heads):
        super().__init__()
        self.heads, self.out_dim = heads, out_dim
        self.proj = nn.Linear(in_dim, heads * out_dim, bias=False)
        self.att_src = nn.Parameter(torch.empty(heads, out_dim))
        self.att_dst = nn.Parameter(torch.empty(heads, out_dim))
        nn.init.xavier_uniform_(self.att_src)
        nn.init.xavier_uniform_(self.att_dst)

    def forward(self, x, edge_src, edge_dst, n):
        h = self.proj(x).view(n, self.heads, self.out_dim)
        score_src = (h * self.att_src).sum(-1)       # (n, heads)
        score_dst = (h * self.att_dst).sum(-1)
        e = torch.nn.functional.leaky_relu(
            score_src[edge_src] + score_dst[edge_dst], negative_slope=0.2
        )
        e = (e - e.max()).exp()                      # global shift is stable enough here
        denom = torch.zeros(n, self.heads).index_add_(0, edge_dst, e)
        weight = e / denom[edge_dst].clamp(min=1e-12)
        msg = h[edge_src] * weight.unsqueeze(-1)
        out = torch.zeros(n, self.heads, self.out_dim).index_add_(0, edge_dst, msg)
        return out


class Gat(nn.Module):
    """Two attention layers: multi-head concat then single-head output."""

    def __init__(self, in_dim, hidden, classes, heads=4):
        super().__init__()
        self.layer1 = GatLayer(in_dim, hidden, heads)
        self.layer2 = GatLayer(hidden * heads, classes, 1)

    def forward(self, g: GraphTensors):
        n = g.x.shape[0]
        h = self.layer1(g.x, g.edge_src, g.edge_dst, n)
        h = torch.nn.functional.elu(h.reshape(n, -1))
        return self.layer2(h, g.edge_src, g.edge_dst, n).squeeze(1)


class Appnp(nn.Module):
    """MLP predictor followed by personalized-propagation smoothing."""

    def __init__(self, in_dim, hidden, classes, k=10, alpha=0.1):
        super().__init__()
        self.mlp = nn.Sequential(nn.Linear(in_dim, hidden), nn.ReLU(), nn.Linear(hidden, classes))
        self.k, self.alpha = k, alpha

    def forward(self, g: GraphTensors):
        h = self.mlp(g.x)
        z = h
        for _ in range(self.k):
            z = (1.0 - self.alpha) * torch.sparse.mm(g.adj_norm, z) + self.alpha * h
        return z


MODEL_BUILDERS = {
    "mlp": Mlp,
    "gcn": Gcn,
    "graphsage": GraphSage,
    "gat": Gat,
    "appnp": Appnp,
}

SUPPORTED_MODELS = tuple(MODEL_BUILDERS)


def build_model(name: str, in_dim: int, hidden: int, classes: int) -> nn.Module:
    if name not in MODEL_BUILDERS:
        raise ValueError(f"unknown model {name!r} (supported: {', '.join(SUPPORTED_MODELS)})")
    return MODEL_BUILDERS[name](in_dim, hidden, classes)
