// @vitest-environment jsdom
// End-to-end triage: a scripted DOM client drives the real review service
// over live HTTP. Seeds the 168-candidate fixture, accepts every candidate
// through the form with its gold labels, then diffs the export against the
// fixture lexicon (zero row differences expected).

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { afterAll, beforeAll, describe, expect, test } from "vitest";

import { App, type AppElements } from "../src/app.js";
import { getExport } from "../src/api.js";

// vitest runs with cwd = frontend/; the primary package sits one level up
const REPO = resolve(process.cwd(), "..");
const GOLD_PATH = join(REPO, "src", "neolex", "data", "gold_lexicon.tsv");

interface GoldRow {
  word: string;
  pos: string;
  topic: string;
  loan: string;
  deriv: string;
  model: string;
  freq: number;
}

function goldRows(): GoldRow[] {
  const lines = readFileSync(GOLD_PATH, "utf-8").trim().split("\n").slice(1);
  return lines.map((line) => {
    const [word, pos, topic, loan, deriv, model, freq] = line.split("\t");
    return {
      word: word as string,
      pos: pos as string,
      topic: topic as string,
      loan: loan as string,
      deriv: deriv as string,
      model: model as string,
      freq: Number(freq),
    };
  });
}

function shell(): AppElements {
  document.body.innerHTML = `
    <div id="banner" class="banner"></div>
    <nav id="tabs"></nav>
    <select id="sort"><option value="freq">freq</option><option value="lemma">lemma</option></select>
    <div id="queue"></div>
    <div id="detail"></div>
    <div id="form"></div>
    <div id="report"></div>`;
  const el = (id: string) => document.getElementById(id) as HTMLElement;
  return {
    banner: el("banner"),
    tabs: el("tabs"),
    queue: el("queue"),
    detail: el("detail"),
    form: el("form"),
    report: el("report"),
    sortSelect: el("sort") as HTMLSelectElement,
  };
}

function formField(caption: string): HTMLSelectElement | HTMLInputElement {
  for (const label of document.querySelectorAll("#form label.field")) {
    if (label.querySelector("span")?.textContent === caption) {
      return label.querySelector("select, input") as HTMLSelectElement | HTMLInputElement;
    }
  }
  throw new Error(`no form field ${caption}`);
}

function setValue(el: HTMLSelectElement | HTMLInputElement, value: string): void {
  el.value = value;
  el.dispatchEvent(new Event("change", { bubbles: true }));
  el.dispatchEvent(new Event("input", { bubbles: true }));
}

async function waitFor(check: () => Promise<boolean>, timeoutMs: number, what: string): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    if (await check()) return;
    await new Promise((r) => setTimeout(r, 50));
  }
  throw new Error(`timed out waiting for ${what}`);
}

const PORT = 8500 + Math.floor(Math.random() * 400);
const BASE = `http://127.0.0.1:${PORT}`;
let server: ChildProcess | null = null;

describe("end-to-end triage against the live service", () => {
  beforeAll(async () => {
    const work = mkdtempSync(join(tmpdir(), "neolex-e2e-"));
    const seedPath = join(work, "candidates.json");
    const seedScript = [
      "import sys",
      "from neolex import data_path",
      "from neolex.candidates import Candidate, classify_candidates, write_candidates_json",
      "from neolex.derivation import load_affixes, load_loan_lexicons, load_loan_overrides, load_stems",
      "from neolex.lists import load_tsv_rows",
      "from neolex.morphodict import POS, load_pos_overrides",
      "rows = [r for r in load_tsv_rows(data_path('gold_lexicon.tsv'), n_cols=7) if r[0] != 'word']",
      "cands = [Candidate(lemma=r[0], pos=POS.UNKNOWN, freq=int(r[6])) for r in rows]",
      "classify_candidates(cands, load_stems(data_path('stems.tsv')), load_affixes(data_path('affixes.tsv')),",
      "    load_loan_lexicons(data_path('loans')), load_loan_overrides(data_path('loan_overrides.tsv')),",
      "    load_pos_overrides(data_path('pos_overrides.tsv')))",
      `write_candidates_json(cands, sys.argv[1])`,
    ].join("\n");
    const seeding = spawnSync("python3", ["-c", seedScript, seedPath], { encoding: "utf-8" });
    if (seeding.status !== 0) {
      throw new Error(`seeding failed: ${seeding.stderr}`);
    }
    server = spawn("neolex", [
      "review", "serve",
      "--candidates", seedPath,
      "--log", join(work, "decisions.jsonl"),
      "--port", String(PORT),
    ], { stdio: ["ignore", "pipe", "pipe"] });
    await waitFor(async () => {
      try {
        const r = await fetch(`${BASE}/api/meta`);
        return r.ok;
      } catch {
        return false;
      }
    }, 30000, "service startup");
  }, 60000);

  afterAll(() => {
    server?.kill("SIGTERM");
  });

  test("accept all 168 via the UI and diff the export against the fixture", async () => {
    (globalThis as Record<string, unknown>)["NEOLEX_API_BASE"] = BASE;
    const app = new App(shell());
    await app.start();

    const meta = await fetch(`${BASE}/api/meta`).then((r) => r.json());
    expect(meta.total).toBe(168);
    expect(meta.by_status.pending).toBe(168);

    // 168 pending at page size 50: the pager reports 4 pages
    expect(document.querySelector("#queue .pager span")?.textContent).toContain("of 4 (168)");

    const rows = goldRows();
    expect(rows.length).toBe(168);

    for (const row of rows) {
      await app.select(row.word);
      expect(app.current?.lemma).toBe(row.word);
      setValue(formField("part of speech"), row.pos);
      setValue(formField("topic"), row.topic);
      setValue(formField("loan type"), row.loan);
      setValue(formField("derivation"), row.deriv || "Underived");
      setValue(formField("model"), row.model);
      setValue(formField("reviewer"), "e2e");
      document.dispatchEvent(new KeyboardEvent("keydown", { key: "a", bubbles: true }));
      await waitFor(async () => {
        const r = await fetch(`${BASE}/api/candidates/${encodeURIComponent(row.word)}`);
        return r.ok && (await r.json()).status === "accepted";
      }, 10000, `acceptance of ${row.word}`);
    }

    // no pending candidates remain server-side
    const after = await fetch(`${BASE}/api/meta`).then((r) => r.json());
    expect(after.by_status.pending).toBe(0);
    expect(after.by_status.accepted).toBe(168);

    // report pane reflects the finished lexicon
    await app.refreshReport();
    expect(document.querySelector("#report h2")?.textContent).toBe("lexicon: 168 entries");
    expect(document.querySelector("#report .muted")?.textContent).toContain("67 derived");

    // export равен fixture: zero row differences
    const exported = await getExport("tsv");
    const fixture = readFileSync(GOLD_PATH, "utf-8");
    expect(exported).toBe(fixture);
  }, 240000);

  test("reload shows the same state as a fresh client (server log is the truth)", async () => {
    (globalThis as Record<string, unknown>)["NEOLEX_API_BASE"] = BASE;
    const app = new App(shell());
    await app.start();
    // fresh client: pending queue empty, accepted full
    const acceptedTab = [...document.querySelectorAll<HTMLButtonElement>("#tabs .tab")]
      .find((b) => b.textContent === "accepted") as HTMLButtonElement;
    acceptedTab.click();
    await waitFor(async () => document.querySelectorAll("#queue .queue-row").length > 0, 5000, "accepted queue");
    expect(document.querySelector("#queue .pager span")?.textContent).toContain("(168)");
  }, 60000);
});
