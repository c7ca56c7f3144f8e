"""Single-dataset training loop with validation-based checkpointing."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np
import torch

from .auc import macro_ovr_auc
from .loader import Bundle
from .models import build_graph_tensors, build_model


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 150
    lr: float = 0.01
    hidden: int = 32
    weight_decay: float = 5e-4
    eval_every: int = 5

    def metadata(self) -> dict:
        return {
            "epochs": self.epochs,
            "lr": self.lr,
            "hidden": self.hidden,
            "weight_decay": self.weight_decay,
        }


def _derive_seed(bundle: Bundle, model_name: str) -> int:
    key = f"{bundle.meta.get('master_seed')}:{bundle.meta.get('sample_index')}:{model_name}"
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:4], "little")


def train_and_score(bundle: Bundle, model_name: str, cfg: TrainConfig) -> float:
    """Train one model on one bundle; returns the test macro OvR AUC at
    the best-validation epoch (final epoch when the val set is empty)."""
    torch.manual_seed(_derive_seed(bundle, model_name))
    g = build_graph_tensors(bundle.edges, bundle.features, bundle.labels)
    model = build_model(model_name, bundle.features.shape[1], cfg.hidden, bundle.num_classes)
    opt = torch.optim.Adam(model.parameters(), lr=cfg.lr, weight_decay=cfg.weight_decay)
    loss_fn = torch.nn.CrossEntropyLoss()

    train_idx = torch.tensor(bundle.train_idx, dtype=torch.long)
    use_val = len(bundle.val_idx) > 0
    best_val, best_test = -np.inf, None
    for epoch in range(1, cfg.epochs + 1):
        model.train()
        opt.zero_grad()
        out = model(g)
        loss = loss_fn(out[train_idx], g.y[train_idx])
        loss.backward()
        opt.step()

        if epoch % cfg.eval_every == 0 or epoch == cfg.epochs:
            model.eval()
            with torch.no_grad():
                logits = model(g).numpy()
            test_auc = macro_ovr_auc(logits[bundle.test_idx], bundle.labels[bundle.test_idx])
            if use_val:
                val_auc = macro_ovr_auc(logits[bundle.val_idx], bundle.labels[bundle.val_idx])
            else:
                val_auc = epoch  # no val set: keep the latest evaluation
            if val_auc > best_val:
                best_val, best_test = val_auc, test_auc
    return float(best_test)
