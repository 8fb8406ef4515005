// Page logic for the chaincount demo. Expects the wasm package built by
//   wasm-pack build crates/demo --target web --out-dir www/pkg
// relative to the repository root, then this directory served statically.

import init, {
  analyze_word,
  ballot_image,
  ballot_preimage,
  chain_polynomial_info,
} from "./pkg/chaincount_demo.js";

const COLORS = {
  UpperArch: getComputedStyle(document.documentElement).getPropertyValue("--upper"),
  LowerArch: getComputedStyle(document.documentElement).getPropertyValue("--lower"),
  Tail: getComputedStyle(document.documentElement).getPropertyValue("--tail"),
};

function byId(id) {
  return document.getElementById(id);
}

// Maps each step index to the color of the segment that owns it.
function stepColors(segments, totalSteps) {
  const colors = new Array(totalSteps).fill("#333");
  if (!segments) return colors;
  for (const segment of segments) {
    for (let i = segment.start; i < segment.start + segment.len; i++) {
      colors[i] = COLORS[segment.kind] || "#333";
    }
  }
  return colors;
}

function drawPath(canvas, points, colors) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!points || points.length === 0) return;

  const margin = 28;
  let span = 1;
  for (const [x, y] of points) span = Math.max(span, x, y);
  span += 1;
  const cell = (Math.min(canvas.width, canvas.height) - 2 * margin) / span;
  const px = (x) => margin + x * cell;
  const py = (y) => canvas.height - margin - y * cell;

  ctx.lineWidth = 1;
  ctx.strokeStyle = getComputedStyle(document.documentElement).getPropertyValue("--grid");
  for (let i = 0; i <= span; i++) {
    ctx.beginPath();
    ctx.moveTo(px(i), py(0));
    ctx.lineTo(px(i), py(span));
    ctx.stroke();
    ctx.beginPath();
    ctx.moveTo(px(0), py(i));
    ctx.lineTo(px(span), py(i));
    ctx.stroke();
  }

  // diagonal y = x
  ctx.strokeStyle = getComputedStyle(document.documentElement).getPropertyValue("--diag");
  ctx.setLineDash([5, 4]);
  ctx.beginPath();
  ctx.moveTo(px(0), py(0));
  ctx.lineTo(px(span), py(span));
  ctx.stroke();
  ctx.setLineDash([]);

  ctx.lineWidth = 3;
  ctx.lineCap = "round";
  for (let i = 0; i + 1 < points.length; i++) {
    ctx.strokeStyle = (colors && colors[i]) || "#333";
    ctx.beginPath();
    ctx.moveTo(px(points[i][0]), py(points[i][1]));
    ctx.lineTo(px(points[i + 1][0]), py(points[i + 1][1]));
    ctx.stroke();
  }

  ctx.fillStyle = "#111";
  for (const [x, y] of points) {
    ctx.beginPath();
    ctx.arc(px(x), py(y), 2.5, 0, 2 * Math.PI);
    ctx.fill();
  }
}

// --- path explorer -------------------------------------------------------

function runExplorer() {
  const errorBox = byId("explore-error");
  errorBox.textContent = "";
  const data = JSON.parse(analyze_word(byId("explore-word").value.trim()));
  if (data.error) {
    errorBox.textContent = data.error;
    return;
  }
  const colors = stepColors(data.segments, data.word.length);
  drawPath(byId("explore-canvas"), data.points, colors);
  byId("explore-caption").textContent =
    `${data.word || "(empty)"} ends at (${data.endpoint[0]}, ${data.endpoint[1]}), ` +
    `class ${data.class}, weight λ^${data.total_exponent}`;

  const rows = data.segments
    .map(
      (s, i) =>
        `<tr><td>${i + 1}</td><td>${s.kind}</td><td>${s.word}</td><td>λ^${s.exponent}</td></tr>`
    )
    .join("");
  byId("explore-table").innerHTML =
    `<table><tr><th>#</th><th>segment</th><th>word</th><th>weight</th></tr>${rows}` +
    `<tr><td></td><td>total</td><td>${data.upper_arch_count} upper arch(es)</td>` +
    `<td>λ^${data.total_exponent}</td></tr></table>`;
}

function randomWord() {
  const length = 8 + Math.floor(Math.random() * 7);
  let word = "";
  for (let i = 0; i < length; i++) word += Math.random() < 0.5 ? "N" : "E";
  byId("explore-word").value = word;
  runExplorer();
}

// --- bijection -----------------------------------------------------------

function showBijection(data, leftLabel, rightLabel) {
  const errorBox = byId("bij-error");
  errorBox.textContent = "";
  if (data.error) {
    errorBox.textContent = data.error;
    return;
  }
  const inputAnalysis = JSON.parse(analyze_word(data.input));
  const outputAnalysis = JSON.parse(analyze_word(data.output));
  drawPath(
    byId("bij-left"),
    data.input_points,
    stepColors(inputAnalysis.segments, data.input.length)
  );
  drawPath(
    byId("bij-right"),
    data.output_points,
    stepColors(outputAnalysis.segments, data.output.length)
  );
  byId("bij-left-caption").textContent = `${leftLabel}: ${data.input || "(empty)"}`;
  byId("bij-right-caption").textContent = `${rightLabel}: ${data.output || "(empty)"} (k = ${data.k})`;
}

function runForward() {
  const data = JSON.parse(ballot_image(byId("bij-word").value.trim()));
  showBijection(data, "input path", "ballot image");
  if (!data.error) {
    byId("inv-word").value = data.output;
    byId("inv-x").value = data.source[0];
    byId("inv-y").value = data.source[1];
    byId("inv-k").value = data.k;
  }
}

function runInverse() {
  const data = JSON.parse(
    ballot_preimage(
      byId("inv-word").value.trim(),
      Number(byId("inv-x").value),
      Number(byId("inv-y").value),
      Number(byId("inv-k").value)
    )
  );
  showBijection(data, "ballot word", "reconstructed path");
}

// --- chain counting ------------------------------------------------------

function runCount() {
  const errorBox = byId("count-error");
  errorBox.textContent = "";
  byId("count-poly").textContent = "";
  byId("count-table").innerHTML = "";
  const data = JSON.parse(chain_polynomial_info(byId("count-alphas").value.trim()));
  if (data.error) {
    errorBox.textContent = data.error;
    return;
  }
  byId("count-poly").textContent =
    `f(${data.alphas.join(",")}) = ${data.rendered}   ` +
    `(degree ${data.degree ?? 0}, coefficient sum ${data.coefficient_sum})`;
  const rows = data.evaluations
    .map(
      (e) =>
        `<tr><td>${e.p}${e.prime ? "" : " (not prime)"}</td><td>${e.value}</td></tr>`
    )
    .join("");
  byId("count-table").innerHTML =
    `<table><tr><th>p</th><th>principal series</th></tr>${rows}</table>`;
}

// --- wire-up -------------------------------------------------------------

await init();

byId("explore-run").addEventListener("click", runExplorer);
byId("explore-random").addEventListener("click", randomWord);
byId("explore-word").addEventListener("change", runExplorer);
byId("bij-forward").addEventListener("click", runForward);
byId("bij-inverse").addEventListener("click", runInverse);
byId("bij-word").addEventListener("change", runForward);
byId("count-run").addEventListener("click", runCount);
byId("count-alphas").addEventListener("change", runCount);

runExplorer();
runForward();
runCount();
