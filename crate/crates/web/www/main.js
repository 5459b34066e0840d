// Built with: wasm-pack build crates/web --target web --out-dir www/pkg
import init, { expand, solve_pell, family_solutions } from "./pkg/pellkit_web.js";

await init();

function wire(id, run) {
  const form = document.getElementById(id);
  const out = document.getElementById(`${id}-out`);
  const go = () => {
    const f = Object.fromEntries(new FormData(form));
    out.textContent = JSON.stringify(JSON.parse(run(f)), null, 2);
  };
  form.addEventListener("submit", (e) => { e.preventDefault(); go(); });
  go();
}

wire("expand", (f) => expand(f.poly, Number(f.steps)));
wire("solve", (f) => solve_pell(f.poly, Number(f.sign), f.ring, Number(f.count)));
wire("family", (f) => family_solutions(Number(f.k), BigInt(f.d), Number(f.count)));
