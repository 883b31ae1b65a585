import init, { quotientExplorer, sigmaExplorer, algebraCalc } from "./pkg/unitgroup_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("error");
  try {
    out.textContent = JSON.stringify(JSON.parse(f()), null, 2);
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e);
  }
}

await init();

$("q-run").onclick = () =>
  show($("q-out"), () => quotientExplorer($("q-group").value, $("q-gens").value));
$("s-run").onclick = () =>
  show($("s-out"), () => sigmaExplorer($("s-family").value, Number($("s-n").value)));
$("c-run").onclick = () =>
  show($("c-out"), () => algebraCalc($("c-group").value, $("c-x").value, $("c-y").value));
