// Glue for the static demo page. Expects the wasm-bindgen bundle in ./pkg
// (see the README for the two build commands).

const report = document.getElementById("report");
const canvas = document.getElementById("canvas");
const ctx = canvas.getContext("2d");

let wasm = null;
try {
  wasm = await import("./pkg/sunscan_wasm.js");
  await wasm.default();
  report.textContent = "ready";
} catch (e) {
  report.textContent =
    "could not load ./pkg/sunscan_wasm.js — build the wasm bundle first.\n" + e;
}

const graphText = () => document.getElementById("graph").value;
const num = (id) => Number(document.getElementById(id).value);

function say(lines) {
  report.textContent = Array.isArray(lines) ? lines.join("\n") : String(lines);
}

// ---------------------------------------------------------------- drawing

function circleLayout(n, cx, cy, r) {
  const pos = [];
  for (let i = 0; i < n; i++) {
    const a = -Math.PI / 2 + (2 * Math.PI * i) / Math.max(n, 1);
    pos.push([cx + r * Math.cos(a), cy + r * Math.sin(a)]);
  }
  return pos;
}

// Gadget-aware layout: substituted blocks on top, the central clique in the
// middle, the stable set below; h-gadget pendants sit outside the circle at
// their edge midpoints.
function layoutFromLabels(g, labels) {
  const W = canvas.width, H = canvas.height;
  if (!labels) return circleLayout(g.n, W / 2, H / 2, Math.min(W, H) * 0.42);
  const pos = new Array(g.n);
  const kinds = new Set(labels.map((l) => l.kind));
  if (kinds.has("SUB") || kinds.has("U")) {
    const blocks = new Map();
    let k = 0;
    for (const l of labels) {
      if (l.kind === "SUB") {
        if (!blocks.has(l.source)) blocks.set(l.source, []);
        blocks.get(l.source).push(l);
        k = Math.max(k, l.copy + 1);
      }
      if (l.kind === "U" || l.kind === "W" || l.kind === "X") k = Math.max(k, l.index + 1);
    }
    const nb = Math.max(blocks.size, 1);
    const blockW = W / (nb + 0.5);
    for (const [src, members] of blocks) {
      const cx = blockW * (src + 0.75);
      const cy = H * 0.22;
      const r = Math.min(blockW * 0.3, 84);
      members.forEach((l) => {
        const a = (2 * Math.PI * l.copy) / members.length - Math.PI / 2;
        pos[l.v] = [cx + r * Math.cos(a), cy + r * Math.sin(a)];
      });
    }
    for (const l of labels) {
      const colW = W / (k + 0.5);
      if (l.kind === "U") pos[l.v] = [colW * (l.index + 0.55), H * 0.62];
      if (l.kind === "W") pos[l.v] = [colW * (l.index + 0.95), H * 0.72];
      if (l.kind === "X") pos[l.v] = [colW * (l.index + 0.75), H * 0.9];
    }
    return pos;
  }
  // h-gadget: originals on a circle, pendants past their edge midpoints.
  const inner = circleLayout(
    labels.filter((l) => l.kind === "ORIG").length, W / 2, H / 2, Math.min(W, H) * 0.3);
  for (const l of labels) if (l.kind === "ORIG") pos[l.v] = inner[l.vertex];
  for (const l of labels)
    if (l.kind === "EAR") {
      const [ax, ay] = pos[l.a], [bx, by] = pos[l.b];
      const mx = (ax + bx) / 2, my = (ay + by) / 2;
      const dx = mx - W / 2, dy = my - H / 2;
      const d = Math.hypot(dx, dy) || 1;
      const push = Math.min(W, H) * 0.17 + 40;
      pos[l.v] = [mx + (dx / d) * push, my + (dy / d) * push];
    }
  return pos;
}

function roleColor(label) {
  if (!label) return "#4477cc";
  switch (label.kind) {
    case "SUB": return `hsl(${(label.source * 47) % 360} 45% 45%)`;
    case "U": return "#9d4edd";
    case "W": return "#6a4c93";
    case "X": return "#e76f51";
    case "ORIG": return "#4477cc";
    case "EAR": return "#e9a23b";
    default: return "#4477cc";
  }
}

function draw(g, opts = {}) {
  const { labels = null, highlight = null } = opts;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!g) return;
  const pos = layoutFromLabels(g, labels);
  const hub = new Set(highlight?.hub ?? []);
  const ears = new Set(highlight?.ears ?? []);
  const cycle = highlight?.cycle ?? null;
  const cycleEdge = new Set();
  if (cycle)
    for (let i = 0; i < cycle.length; i++) {
      const a = cycle[i], b = cycle[(i + 1) % cycle.length];
      cycleEdge.add(a < b ? `${a},${b}` : `${b},${a}`);
    }
  const inWitness = (v) => hub.has(v) || ears.has(v);

  for (const [u, v] of g.edges) {
    const key = u < v ? `${u},${v}` : `${v},${u}`;
    const lit = cycleEdge.has(key) || (inWitness(u) && inWitness(v));
    ctx.strokeStyle = cycleEdge.has(key) ? "#d62828" : lit ? "#b8860b" : "#bbb";
    ctx.lineWidth = lit ? 2.4 : 0.8;
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  for (let v = 0; v < g.n; v++) {
    if (!pos[v]) continue;
    const r = hub.has(v) || ears.has(v) || cycle?.includes(v) ? 13 : 10;
    ctx.beginPath();
    ctx.arc(pos[v][0], pos[v][1], r, 0, 2 * Math.PI);
    ctx.fillStyle = hub.has(v) ? "#b8860b"
      : ears.has(v) ? "#e76f51"
      : cycle?.includes(v) ? "#d62828"
      : roleColor(labels?.[v]);
    ctx.fill();
    ctx.fillStyle = "#fff";
    ctx.font = "11px ui-monospace, monospace";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(String(v), pos[v][0], pos[v][1]);
  }
}

// ---------------------------------------------------------------- actions

function guard(fn) {
  return () => {
    if (!wasm) return;
    try { fn(); } catch (e) { say("error: " + e); }
  };
}

function parseEdgeList(text) {
  const lines = text.split("\n").map((l) => l.trim())
    .filter((l) => l && !l.startsWith("#"));
  const [n] = lines[0].split(/\s+/).map(Number);
  const edges = lines.slice(1).map((l) => l.split(/\s+/).map(Number));
  return { n, edges };
}

document.getElementById("gen").onclick = guard(() => {
  const text = wasm.gen_triangle_free(num("gen-n"), num("gen-m"), num("gen-seed"));
  document.getElementById("graph").value = text;
  draw(parseEdgeList(text));
  say("generated a triangle-free instance");
});

document.getElementById("recognize").onclick = guard(() => {
  const r = JSON.parse(wasm.recognize(graphText()));
  const lines = [
    `CHORDAL ${r.chordal ? "yes" : "no"}`,
    r.simplicial_order ? `SIMPLICIAL_ORDER ${r.simplicial_order.join(" ")}` : null,
    r.hole ? `HOLE ${r.hole.join(" ")}` : null,
    `STRONGLY_CHORDAL ${r.strongly_chordal ? "yes" : "no"}`,
    r.simple_order ? `SIMPLE_ORDER ${r.simple_order.join(" ")}` : null,
    r.sun ? `SUN t=${r.sun.t} hub=[${r.sun.hub.join(" ")}] ears=[${r.sun.ears.join(" ")}]` : null,
  ].filter(Boolean);
  draw(r.graph, { highlight: r.sun ?? (r.hole ? { cycle: r.hole } : null) });
  say(lines);
});

document.getElementById("detect").onclick = guard(() => {
  const r = JSON.parse(wasm.detect_sun(graphText(), num("sun-order"), num("sun-budget")));
  if (r.status === "found") {
    draw(r.graph, { highlight: r.witness });
    say([`${r.witness.t}`, r.witness.hub.join(" "), r.witness.ears.join(" ")]);
  } else if (r.status === "absent") {
    draw(r.graph);
    say("ABSENT");
  } else {
    draw(r.graph);
    say(`INDETERMINATE ${r.nodes_used}`);
  }
});

function buildGadget(kind) {
  const r = JSON.parse(wasm.build_reduction(kind, graphText(), num("red-k"), 2_000_000));
  const highlight = r.sun.status === "found" ? r.sun.witness : null;
  draw(r.product, { labels: r.labels, highlight });
  say([
    `${kind}-gadget: ${r.product.n} vertices, ${r.product.edges.length} edges`,
    r.sun.status === "found"
      ? `sun: t=${r.sun.witness.t} (highlighted)`
      : `sun: ${r.sun.status}`,
    "product edge list:",
    r.text,
  ]);
}

document.getElementById("build-f").onclick = guard(() => buildGadget("f"));
document.getElementById("build-h").onclick = guard(() => buildGadget("h"));
