"""Composite recurrent autoencoder: forward pass and backpropagation.

Standard LSTM cell per recurrent layer (input/forget/output gates, tanh
candidate).  Gates are stored activated in (i, f, o, g) order so one
sigmoid covers the first 3H columns and one tanh the last H.

The encoder consumes the (W, F) window; its final hidden state is the
latent code.  The decoder receives the latent repeated W times (exploited
as a static input: its input product is computed once, not per step) and a
dense per-step projection reconstructs the window.  The prediction head
maps the latent through tanh hidden layers to 4 logistic-saturated
outputs.  Gradients are exact (verified against central finite
differences).
"""

import numpy as np

from ..errors import ShapeMismatch
from .layout import NetworkWeights, ParamLayout
from .spec import NetworkSpec


def build_layout(spec: NetworkSpec) -> ParamLayout:
    entries = []
    din = spec.features
    for k, h in enumerate(spec.encoder):
        entries += [(f"enc{k}.Wx", (din, 4 * h)), (f"enc{k}.Wh", (h, 4 * h)),
                    (f"enc{k}.b", (4 * h,))]
        din = h
    din = spec.latent
    for k, h in enumerate(spec.decoder):
        entries += [(f"dec{k}.Wx", (din, 4 * h)), (f"dec{k}.Wh", (h, 4 * h)),
                    (f"dec{k}.b", (4 * h,))]
        din = h
    entries += [("proj.W", (spec.decoder[-1], spec.features)),
                ("proj.b", (spec.features,))]
    din = spec.latent
    for k, h in enumerate(spec.head):
        entries += [(f"head{k}.W", (din, h)), (f"head{k}.b", (h,))]
        din = h
    return ParamLayout(entries)


def init_weights(spec: NetworkSpec, seed: int) -> NetworkWeights:
    """Seeded uniform +-1/sqrt(fan_in) initialization (biases included)."""
    layout = build_layout(spec)
    rng = np.random.default_rng(seed)
    flat = np.empty(layout.size, dtype=np.float64)
    for name, off, shape in layout.entries:
        if name.endswith(".b"):
            base = name[:-2]
            w_shape = layout.index[base + ".W" if base + ".W" in layout.index
                                   else base + ".Wx"][1]
            fan_in = w_shape[0]
        else:
            fan_in = shape[0]
        lim = 1.0 / np.sqrt(fan_in)
        n = int(np.prod(shape))
        flat[off:off + n] = rng.uniform(-lim, lim, size=n)
    return NetworkWeights(flat, layout, spec.spec_hash())


def _sigmoid(x):
    with np.errstate(over="ignore"):
        return 1.0 / (1.0 + np.exp(-x))


def _lstm_forward(x, Wx, Wh, b):
    """x: (W, B, Din) time-major sequence, or (B, Din) as a static per-step
    input.  Returns the time-major hidden sequence (W, B, H) and the
    backward cache.  For static input the step count comes from `steps`.
    """
    static = x.ndim == 2
    if static:
        B, Din = x.shape
        W = _lstm_forward.steps
        zx_static = x @ Wx + b
    else:
        W, B, Din = x.shape
        zx = (x.reshape(W * B, Din) @ Wx + b).reshape(W, B, -1)
    H = Wh.shape[0]
    hs = np.empty((W, B, H))
    cs = np.empty((W, B, H))
    tcs = np.empty((W, B, H))
    gates = np.empty((W, B, 4 * H))
    h = np.zeros((B, H))
    c = np.zeros((B, H))
    H3 = 3 * H
    with np.errstate(over="ignore"):
        for t in range(W):
            z = gates[t]
            np.dot(h, Wh, out=z)
            z += zx_static if static else zx[t]
            zs = z[:, :H3]
            np.exp(-zs, out=zs)
            zs += 1.0
            np.divide(1.0, zs, out=zs)
            np.tanh(z[:, H3:], out=z[:, H3:])
            i = z[:, :H]
            f = z[:, H:2 * H]
            o = z[:, 2 * H:H3]
            g = z[:, H3:]
            cn = cs[t]
            np.multiply(f, c, out=cn)
            cn += i * g
            tc = tcs[t]
            np.tanh(cn, out=tc)
            h = hs[t]
            np.multiply(o, tc, out=h)
            c = cn
    return hs, {"x": x, "gates": gates, "cs": cs, "tcs": tcs, "hs": hs,
                "static": static}


def _lstm_backward(cache, Wx, Wh, dout, dh_last=None):
    """Backprop through time.  dout: (W, B, H) time-major gradient on the
    hidden sequence; dh_last adds to the final step's hidden gradient.  For
    a static input, the returned dx has shape (B, Din) (summed over steps)."""
    x, gates, cs, tcs, hs = (cache["x"], cache["gates"], cache["cs"],
                             cache["tcs"], cache["hs"])
    static = cache["static"]
    H = Wh.shape[0]
    W, B = hs.shape[0], hs.shape[1]
    H3 = 3 * H
    dZ = np.empty((W, B, 4 * H))
    dWh = np.zeros_like(Wh)
    WhT = np.ascontiguousarray(Wh.T)
    dh_next = np.zeros((B, H))
    dc_next = np.zeros((B, H))
    for t in range(W - 1, -1, -1):
        dh = dout[t] + dh_next
        if dh_last is not None and t == W - 1:
            dh += dh_last
        z = gates[t]
        i = z[:, :H]
        f = z[:, H:2 * H]
        o = z[:, 2 * H:H3]
        g = z[:, H3:]
        tc = tcs[t]
        dc = 1.0 - tc * tc
        dc *= dh
        dc *= o
        dc += dc_next
        dz = dZ[t]
        dz[:, :H] = (dc * g) * (i * (1.0 - i))
        if t > 0:
            dz[:, H:2 * H] = (dc * cs[t - 1]) * (f * (1.0 - f))
        else:
            dz[:, H:2 * H] = 0.0
        dz[:, 2 * H:H3] = (dh * tc) * (o * (1.0 - o))
        dz[:, H3:] = (dc * i) * (1.0 - g * g)
        if t > 0:
            dWh += hs[t - 1].T @ dz
        np.dot(dz, WhT, out=dh_next)
        np.multiply(dc, f, out=dc_next)
    dZf = dZ.reshape(W * B, 4 * H)
    db = dZf.sum(axis=0)
    if static:
        dz_sum = dZ.sum(axis=0)
        dWx = x.T @ dz_sum
        dx = dz_sum @ Wx.T
    else:
        Din = x.shape[2]
        dWx = x.reshape(W * B, Din).T @ dZf
        dx = (dZf @ Wx.T).reshape(W, B, Din)
    return dx, dWx, dWh, db


def forward_batch(weights: NetworkWeights, windows, spec: NetworkSpec):
    """Batched forward: windows (B, W, F) -> (pred (B,4), recon (B,W,F), cache)."""
    x = np.asarray(windows, dtype=np.float64)
    if x.ndim != 3 or x.shape[1] != spec.window or x.shape[2] != spec.features:
        raise ShapeMismatch(
            f"window batch shape {x.shape} != (B, {spec.window}, {spec.features})")
    B, W, _ = x.shape
    g = weights.get
    _lstm_forward.steps = W

    enc_caches = []
    seq = np.ascontiguousarray(x.transpose(1, 0, 2))  # time-major (W, B, F)
    for k in range(len(spec.encoder)):
        seq, cache = _lstm_forward(seq, g(f"enc{k}.Wx"), g(f"enc{k}.Wh"), g(f"enc{k}.b"))
        enc_caches.append(cache)
    latent = seq[-1]

    dec_caches = []
    dec_in = latent  # static input: the latent repeated over all steps
    for k in range(len(spec.decoder)):
        dec_in, cache = _lstm_forward(dec_in, g(f"dec{k}.Wx"), g(f"dec{k}.Wh"), g(f"dec{k}.b"))
        dec_caches.append(cache)
    recon = dec_in.reshape(W * B, -1) @ g("proj.W") + g("proj.b")
    recon = recon.reshape(W, B, spec.features).transpose(1, 0, 2)

    acts = [latent]
    a = latent
    n_head = len(spec.head)
    for k in range(n_head):
        z = a @ g(f"head{k}.W") + g(f"head{k}.b")
        a = _sigmoid(z) if k == n_head - 1 else np.tanh(z)
        acts.append(a)
    pred = a

    cache = {"x": x, "enc": enc_caches, "dec": dec_caches,
             "latent": latent, "dec_top": dec_in, "recon": recon,
             "head_acts": acts}
    return pred, recon, cache


def forward(weights: NetworkWeights, window, spec: NetworkSpec):
    """Single-window forward: (W, F) -> (pred (4,), recon (W, F), cache)."""
    w = np.asarray(window, dtype=np.float64)
    if w.ndim != 2:
        raise ShapeMismatch(f"window must be 2-D, got shape {w.shape}")
    pred, recon, cache = forward_batch(weights, w[None], spec)
    return pred[0], recon[0], cache


def predict_only(weights: NetworkWeights, window, spec: NetworkSpec):
    """Prediction head only (no decoder work); used in closed-loop rollouts."""
    x = np.asarray(window, dtype=np.float64)
    if x.shape != (spec.window, spec.features):
        raise ShapeMismatch(
            f"window shape {x.shape} != ({spec.window}, {spec.features})")
    g = weights.get
    _lstm_forward.steps = spec.window
    seq = np.ascontiguousarray(x[:, None, :])  # time-major (W, 1, F)
    for k in range(len(spec.encoder)):
        seq, _ = _lstm_forward(seq, g(f"enc{k}.Wx"), g(f"enc{k}.Wh"), g(f"enc{k}.b"))
    a = seq[-1, 0]
    n_head = len(spec.head)
    for k in range(n_head):
        z = a @ g(f"head{k}.W") + g(f"head{k}.b")
        a = _sigmoid(z) if k == n_head - 1 else np.tanh(z)
    return a


def backward(weights: NetworkWeights, windows, targets, spec: NetworkSpec,
             lambda_rec: float, cache=None):
    """Gradient of the mean composite loss over the batch.

    Returns (loss, flat gradient).  windows (B, W, F), targets (B, 4).
    """
    x = np.asarray(windows, dtype=np.float64)
    t = np.asarray(targets, dtype=np.float64)
    if x.ndim != 3 or len(x) == 0:
        raise ShapeMismatch("windows must be a non-empty (B, W, F) batch")
    if t.shape != (len(x), spec.head[-1]):
        raise ShapeMismatch(f"target shape {t.shape} != ({len(x)}, {spec.head[-1]})")
    if cache is None:
        pred, recon, cache = forward_batch(weights, x, spec)
    else:
        pred, recon = cache["head_acts"][-1], cache["recon"]
    B, W, F = x.shape
    g = weights.get

    pred_err = pred - t
    rec_err = recon - x
    loss = float((pred_err ** 2).mean() + lambda_rec * (rec_err ** 2).mean())

    grad = np.zeros(weights.layout.size)
    gview = lambda name: weights.layout.view(grad, name)

    # head backward (final logistic, tanh hiddens)
    dpred = 2.0 * pred_err / pred_err.size
    acts = cache["head_acts"]
    da = dpred * pred * (1.0 - pred)
    n_head = len(spec.head)
    for k in range(n_head - 1, -1, -1):
        gview(f"head{k}.W")[:] = acts[k].T @ da
        gview(f"head{k}.b")[:] = da.sum(axis=0)
        da = da @ g(f"head{k}.W").T
        if k > 0:
            da = da * (1.0 - acts[k] * acts[k])
    dlatent = da

    # reconstruction branch (time-major internally)
    drecon = (2.0 * lambda_rec / rec_err.size) * rec_err
    dec_top = cache["dec_top"]
    drec_flat = np.ascontiguousarray(drecon.transpose(1, 0, 2)).reshape(W * B, F)
    gview("proj.W")[:] = dec_top.reshape(W * B, -1).T @ drec_flat
    gview("proj.b")[:] = drec_flat.sum(axis=0)
    ddec = (drec_flat @ g("proj.W").T).reshape(W, B, -1)
    for k in range(len(spec.decoder) - 1, -1, -1):
        ddec, dWx, dWh, db = _lstm_backward(
            cache["dec"][k], g(f"dec{k}.Wx"), g(f"dec{k}.Wh"), ddec)
        gview(f"dec{k}.Wx")[:] = dWx
        gview(f"dec{k}.Wh")[:] = dWh
        gview(f"dec{k}.b")[:] = db
    # the bottom decoder layer's input is the (static) repeated latent
    dlatent = dlatent + ddec

    # encoder BPTT; the latent gradient enters at the last step of the top layer
    denc = np.zeros((W, B, spec.encoder[-1]))
    dh_last = dlatent
    for k in range(len(spec.encoder) - 1, -1, -1):
        denc, dWx, dWh, db = _lstm_backward(
            cache["enc"][k], g(f"enc{k}.Wx"), g(f"enc{k}.Wh"), denc,
            dh_last=dh_last)
        dh_last = None
        gview(f"enc{k}.Wx")[:] = dWx
        gview(f"enc{k}.Wh")[:] = dWh
        gview(f"enc{k}.b")[:] = db
    return loss, grad
