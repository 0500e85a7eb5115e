// Candidate inspection pane: frequency, flags, KWIC contexts with the hit
// token highlighted, and the machine-suggested labels (read-only).

import type { CandidateDetail } from "./types.js";

function highlight(snippet: string, lemma: string): DocumentFragment {
  const fragment = document.createDocumentFragment();
  for (const token of snippet.split(" ")) {
    if (fragment.childNodes.length) fragment.append(" ");
    if (token === lemma || token.split("-")[0] === lemma) {
      const mark = document.createElement("mark");
      mark.textContent = token;
      fragment.append(mark);
    } else {
      fragment.append(token);
    }
  }
  return fragment;
}

export function renderDetail(container: HTMLElement, candidate: CandidateDetail): void {
  container.textContent = "";

  const head = document.createElement("div");
  head.className = "detail-head";
  const title = document.createElement("h2");
  title.textContent = candidate.lemma;
  const freq = document.createElement("span");
  freq.className = "freq";
  freq.textContent = `${candidate.freq} occurrences`;
  const status = document.createElement("span");
  status.className = `status status-${candidate.status}`;
  status.textContent = candidate.status + (candidate.reject_reason ? ` (${candidate.reject_reason})` : "");
  head.append(title, freq, status);
  container.append(head);

  const flags = [...candidate.auto_flags];
  if (candidate.in_reference) flags.push("in_reference");
  if (flags.length) {
    const row = document.createElement("div");
    row.className = "flags";
    for (const flag of flags) {
      const b = document.createElement("span");
      b.className = "badge";
      b.textContent = flag;
      row.append(b);
    }
    container.append(row);
  }

  if (candidate.suggested) {
    const s = candidate.suggested;
    const hint = document.createElement("p");
    hint.className = "suggested";
    const parts = [
      s.pos && `pos ${s.pos}`,
      s.loan_type && `loan ${s.loan_type}`,
      s.deriv_type && `derivation ${s.deriv_type}`,
      s.model && `model ${s.model}`,
    ].filter(Boolean);
    hint.textContent = parts.length ? `suggested: ${parts.join(" · ")}` : "no suggestions";
    container.append(hint);
  }

  const contexts = document.createElement("div");
  contexts.className = "contexts";
  if (!candidate.contexts.length) {
    const none = document.createElement("p");
    none.className = "muted";
    none.textContent = "no context snippets";
    contexts.append(none);
  }
  for (const snippet of candidate.contexts) {
    const line = document.createElement("p");
    line.className = "kwic";
    line.append(highlight(snippet, candidate.lemma));
    contexts.append(line);
  }
  container.append(contexts);
}
