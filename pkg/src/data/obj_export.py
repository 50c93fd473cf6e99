"""
Wavefront OBJ export of the folded card.

The model is in millimetres with the circle centre at the origin and the card fold
on the x-axis. The card back is the half-card y in [0, H/2] in the xy-plane; the
front half is the same rectangle rotated by alpha about the x-axis. Each rib is two
segments, base to rim point and rim point to front anchor, and the rim is one line
element running from (-R, 0, 0) through the rib tips to (R, 0, 0).
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from curves.flat_visor import rib_lengths
from fold3d.kinematics import visor_points_3d
from fold3d.primitives import FoldAngle, check_fold_angle
from utils.exceptions import ArgumentError
from utils.helpers import get_logger
from visualization.template import CardSpec

logger = get_logger(__name__)

DEDUP_QUANTUM = 1e-9


def obj_rib_params(n: int) -> np.ndarray:
    """s_i = -1 + i 2/(n+1), i = 1..n."""
    return -1.0 + np.arange(1, n + 1) * 2.0 / (n + 1)


@dataclass
class ObjMesh:
    """Vertices plus 0-based line and face index lists."""

    vertices: List[Tuple[float, float, float]] = field(default_factory=list)
    lines: List[List[int]] = field(default_factory=list)
    faces: List[List[int]] = field(default_factory=list)
    _index: Dict[Tuple[int, int, int], int] = field(default_factory=dict, repr=False)

    def vertex(self, p: Sequence[float]) -> int:
        """Index of ``p``, adding it unless a vertex within the quantum exists."""
        scaled = np.round(np.asarray(p, dtype=float) / DEDUP_QUANTUM)
        key = tuple(int(k) for k in scaled)
        if key not in self._index:
            self._index[key] = len(self.vertices)
            self.vertices.append(tuple(k * DEDUP_QUANTUM + 0.0 for k in key))
        return self._index[key]

    def polyline(self, points) -> None:
        idx = [self.vertex(p) for p in points]
        # consecutive duplicates collapse at alpha = 0 and alpha = pi
        idx = [i for j, i in enumerate(idx) if j == 0 or i != idx[j - 1]]
        if len(idx) >= 2:
            self.lines.append(idx)

    def face(self, points) -> None:
        self.faces.append([self.vertex(p) for p in points])

    def to_bytes(self, comment: Optional[str] = None) -> bytes:
        out = [f"# {comment}"] if comment else []
        out += [f"v {x:.12g} {y:.12g} {z:.12g}" for x, y, z in self.vertices]
        out += ["l " + " ".join(str(i + 1) for i in line) for line in self.lines]
        out += ["f " + " ".join(str(i + 1) for i in face) for face in self.faces]
        return ("\n".join(out) + "\n").encode("utf-8")


def export_fold_obj(
    alpha: FoldAngle,
    spec: CardSpec,
    n: Optional[int] = None,
    rib_width_mm: Optional[float] = None,
) -> bytes:
    """
    Build the folded card mesh at fold angle alpha.

    Args:
        alpha (float): Fold angle in radians, inside [0, pi].
        spec (CardSpec): Card dimensions and circle radius.
        n (int): Number of ribs; defaults to ``spec.rib_count``.
        rib_width_mm (float): If given, ribs become quad strips of this width
            instead of line segments.

    Returns:
        bytes: OBJ text, vertices first, then line elements, then faces.

    Raises:
        ArgumentError: If n < 2 or the rib width is not positive.
        DomainError: If alpha is outside [0, pi].
    """
    a = float(check_fold_angle(alpha))
    n = spec.rib_count if n is None else n
    if int(n) != n or n < 2:
        raise ArgumentError(f"Need at least 2 ribs, got {n}.")
    if rib_width_mm is not None and not rib_width_mm > 0:
        raise ArgumentError(f"rib_width_mm must be positive, got {rib_width_mm}.")
    n = int(n)

    R = spec.circle_radius_mm
    half_w, half_h = 0.5 * spec.card_width_mm, 0.5 * spec.card_height_mm
    up = np.array([0.0, np.cos(a), np.sin(a)])
    mesh = ObjMesh()

    back = [(-half_w, 0, 0), (half_w, 0, 0), (half_w, half_h, 0), (-half_w, half_h, 0)]
    mesh.polyline(back + back[:1])
    front = [np.array([x, 0.0, 0.0]) + y * up for x, y, _ in back]
    mesh.polyline(front + front[:1])

    s = obj_rib_params(n)
    r = rib_lengths(s)
    tips = R * visor_points_3d(s, a)
    bases = R * np.column_stack([s, r, np.zeros_like(s)])
    on_fold = np.column_stack([s, np.zeros_like(s), np.zeros_like(s)])
    anchors = R * (on_fold + r[:, None] * up)

    if rib_width_mm is None:
        for b, p, b1 in zip(bases, tips, anchors):
            mesh.polyline([b, p])
            mesh.polyline([p, b1])
    else:
        dx = np.array([0.5 * rib_width_mm, 0.0, 0.0])
        for b, p, b1 in zip(bases, tips, anchors):
            mesh.face([b - dx, b + dx, p + dx, p - dx])
            mesh.face([p - dx, p + dx, b1 + dx, b1 - dx])

    mesh.polyline([(-R, 0.0, 0.0), *tips, (R, 0.0, 0.0)])

    logger.info(
        f"Fold mesh at alpha={a:.6f}: {len(mesh.vertices)} vertices, "
        f"{len(mesh.lines)} lines, {len(mesh.faces)} faces."
    )
    return mesh.to_bytes(comment=f"visorlab fold alpha={a:.12g} ribs={n}")


def read_obj(source: Union[str, Path, bytes]) -> ObjMesh:
    """
    Parse the subset of OBJ written here (v, l and f records; comments skipped).

    Raises:
        ArgumentError: On an unknown record or an out-of-range index.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    else:
        text = Path(source).read_text(encoding="utf-8")
    mesh = ObjMesh()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        tag, values = parts[0], parts[1:]
        if tag not in ("v", "l", "f"):
            raise ArgumentError(f"Unsupported OBJ record '{tag}' on line {lineno}.")
        try:
            if tag == "v":
                x, y, z = (float(v) for v in values)
                mesh.vertices.append((x, y, z))
            else:
                target = mesh.lines if tag == "l" else mesh.faces
                target.append([int(v) - 1 for v in values])
        except ValueError as e:
            raise ArgumentError(f"Malformed OBJ line {lineno}: {raw!r}") from e
    for element in mesh.lines + mesh.faces:
        if any(not 0 <= i < len(mesh.vertices) for i in element):
            raise ArgumentError(f"OBJ element {element} references a missing vertex.")
    return mesh
