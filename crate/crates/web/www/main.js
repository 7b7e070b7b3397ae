import init, { generate_instance, run_greedy, sweep } from "./pkg/greedy_mis_web.js";

const $ = (id) => document.getElementById(id);
const COLORS = { idle: "#90a4ae", picked: "#2e7d32", deleted: "#bbb", current: "#ef6c00", optimum: "#1565c0" };

let instance = null;
let run = null;
let step = 0;
let timer = null;

function args() {
  return {
    family: $("family").value,
    parameter: Number($("parameter").value),
    seed: BigInt($("seed").value || 0),
  };
}

function report(err) {
  $("error").textContent = err ? String(err.message ?? err) : "";
}

/// Vertex states after the first `upto` picks.
function states(upto) {
  const state = new Array(instance.n).fill("idle");
  if (!run) return state;
  for (let i = 0; i < upto; i++) {
    const s = run.steps[i];
    for (const v of s.removed) state[v] = "deleted";
    state[s.vertex] = i === upto - 1 ? "current" : "picked";
  }
  return state;
}

/// Greedy lane assignment so overlapping intervals never share a row.
function lanes(spans) {
  const order = spans.map((_, i) => i).sort((a, b) => spans[a][0] - spans[b][0] || a - b);
  const ends = [];
  const lane = new Array(spans.length);
  for (const i of order) {
    let l = ends.findIndex((e) => e < spans[i][0]);
    if (l < 0) { l = ends.length; ends.push(0); }
    ends[l] = spans[i][1];
    lane[i] = l;
  }
  return { lane, count: ends.length };
}

function drawIntervals(ctx, spans, top, height, state, optimum, title) {
  const lo = Math.min(...spans.map((s) => s[0]));
  const hi = Math.max(...spans.map((s) => s[1]));
  const { lane, count } = lanes(spans);
  const width = ctx.canvas.width - 40;
  const x = (t) => 20 + ((t - lo) / Math.max(hi - lo, 1)) * width;
  const row = Math.min(22, (height - 20) / Math.max(count, 1));
  ctx.fillStyle = "#555";
  ctx.fillText(title, 20, top + 12);
  spans.forEach(([a, b], v) => {
    const y = top + 20 + lane[v] * row;
    const w = Math.max(x(b) - x(a), 3);
    ctx.fillStyle = COLORS[state[v]];
    ctx.fillRect(x(a), y, w, row - 6);
    if (optimum.has(v)) {
      ctx.strokeStyle = COLORS.optimum;
      ctx.lineWidth = 2;
      ctx.strokeRect(x(a), y, w, row - 6);
    }
    ctx.fillStyle = "#000";
    ctx.fillText(String(v), x(a) + 2, y + row - 9);
  });
}

function drawGraph(ctx, state, optimum) {
  const { width, height } = ctx.canvas;
  const r = Math.min(width, height) / 2 - 30;
  const pos = Array.from({ length: instance.n }, (_, v) => {
    const a = (2 * Math.PI * v) / instance.n - Math.PI / 2;
    return [width / 2 + r * Math.cos(a), height / 2 + r * Math.sin(a)];
  });
  ctx.strokeStyle = "#ccc";
  ctx.lineWidth = 1;
  for (const [u, v] of instance.edges) {
    if (state[u] === "deleted" && state[v] === "deleted") continue;
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  pos.forEach(([px, py], v) => {
    ctx.beginPath();
    ctx.arc(px, py, 10, 0, 2 * Math.PI);
    ctx.fillStyle = COLORS[state[v]];
    ctx.fill();
    if (optimum.has(v)) {
      ctx.strokeStyle = COLORS.optimum;
      ctx.lineWidth = 3;
      ctx.stroke();
    }
    ctx.fillStyle = "#000";
    ctx.fillText(String(v), px - 4, py + 4);
  });
}

function draw() {
  const ctx = $("view").getContext("2d");
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  ctx.font = "11px system-ui";
  if (!instance) return;
  const state = states(step);
  const optimum = new Set(run ? run.optimum : instance.certificate ?? []);
  const h = ctx.canvas.height;
  if (instance.intervals) {
    drawIntervals(ctx, instance.intervals, 0, h, state, optimum, "intervals");
  } else if (instance.tracks) {
    drawIntervals(ctx, instance.tracks[0], 0, h / 2, state, optimum, "track 1");
    drawIntervals(ctx, instance.tracks[1], h / 2, h / 2, state, optimum, "track 2");
  } else {
    drawGraph(ctx, state, optimum);
  }
  drawLedger();
}

function drawLedger() {
  const table = $("ledger");
  if (!run) { table.innerHTML = ""; return; }
  const head = "<tr><th>#</th><th>vertex</th><th>degree</th><th>ties</th><th>j</th><th>components</th></tr>";
  const rows = run.steps.map((s, i) => {
    const cls = i === step - 1 ? ' class="current"' : "";
    const shown = i < step;
    return `<tr${cls}><td>${i + 1}</td><td>${shown ? s.vertex : ""}</td><td>${shown ? s.degree : ""}</td>` +
      `<td>${shown ? s.tie_set_size : ""}</td><td>${shown ? s.j : ""}</td>` +
      `<td>${shown ? `${s.components_before} &rarr; ${s.components_after}` : ""}</td></tr>`;
  });
  table.innerHTML = head + rows.join("");
}

function summarize() {
  if (!instance) return;
  let text = `${instance.family} (${instance.parameter}): ${instance.n} vertices, ${instance.edges.length} edges` +
    (instance.chordal ? ", chordal" : ", not chordal");
  if (run) {
    const counts = run.counts.map((m, j) => `m${j}=${m}`).join(" ");
    text += ` | ${run.policy}: greedy ${run.greedy} / optimum ${run.opt} = ${run.ratio.num}/${run.ratio.den}` +
      ` | ${counts} | move bound ${run.bound.num}/${run.bound.den} | step ${step} of ${run.steps.length}`;
  }
  $("summary").textContent = text;
}

function generate() {
  stop();
  try {
    const a = args();
    instance = JSON.parse(generate_instance(a.family, a.parameter, a.seed));
    run = null;
    step = 0;
    report(null);
  } catch (e) {
    report(e);
  }
  summarize();
  draw();
}

function execute() {
  stop();
  try {
    if (!instance) generate();
    const a = args();
    run = JSON.parse(run_greedy(a.family, a.parameter, a.seed, $("policy").value, BigInt($("policy-seed").value || 0)));
    step = 0;
    report(null);
  } catch (e) {
    run = null;
    report(e);
  }
  summarize();
  draw();
}

function move(delta) {
  if (!run) return;
  step = Math.max(0, Math.min(run.steps.length, step + delta));
  summarize();
  draw();
}

function stop() {
  if (timer) clearInterval(timer);
  timer = null;
  $("play").textContent = "Play";
}

function play() {
  if (timer) return stop();
  if (!run) execute();
  if (!run) return;
  if (step === run.steps.length) step = 0;
  $("play").textContent = "Pause";
  timer = setInterval(() => {
    move(1);
    if (step === run.steps.length) stop();
  }, 700);
}

function drawSweep(points) {
  const ctx = $("chart").getContext("2d");
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  ctx.font = "11px system-ui";
  if (!points.length) return;
  const ks = points.map((p) => p.k);
  const x = (k) => 40 + ((k - ks[0]) / Math.max(ks[ks.length - 1] - ks[0], 1)) * (width - 60);
  const y = (r) => height - 25 - r * (height - 40);
  ctx.strokeStyle = "#ddd";
  for (const r of [0, 0.5, 2 / 3, 1]) {
    ctx.beginPath();
    ctx.moveTo(40, y(r));
    ctx.lineTo(width - 20, y(r));
    ctx.stroke();
    ctx.fillStyle = "#777";
    ctx.fillText(r.toFixed(3), 2, y(r) + 4);
  }
  ctx.strokeStyle = COLORS.current;
  ctx.lineWidth = 2;
  ctx.beginPath();
  points.forEach((p, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, x(p.k), y(p.ratio.value)));
  ctx.stroke();
  ctx.fillStyle = "#000";
  for (const p of points) {
    ctx.beginPath();
    ctx.arc(x(p.k), y(p.ratio.value), 3, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(String(p.k), x(p.k) - 3, height - 8);
  }
  $("sweep-table").innerHTML = "<tr><th>k</th><th>greedy</th><th>optimum</th><th>ratio</th></tr>" +
    points.map((p) => `<tr><td>${p.k}</td><td>${p.greedy}</td><td>${p.opt}</td>` +
      `<td>${p.ratio.num}/${p.ratio.den} (${p.ratio.value.toFixed(4)})</td></tr>`).join("");
}

function runSweep() {
  try {
    drawSweep(JSON.parse(sweep($("family").value, Number($("kmin").value), Number($("kmax").value))));
    report(null);
  } catch (e) {
    report(e);
  }
}

await init();
$("generate").onclick = generate;
$("run").onclick = execute;
$("prev").onclick = () => { stop(); move(-1); };
$("next").onclick = () => { stop(); move(1); };
$("play").onclick = play;
$("sweep").onclick = runSweep;
$("family").onchange = generate;
generate();
