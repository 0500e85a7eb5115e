// Live aggregate report: one bar row per value on each classification axis.

import type { Report } from "./types.js";

function axis(title: string, breakdown: Record<string, number>, total: number): HTMLElement {
  const section = document.createElement("section");
  section.className = "report-axis";
  const head = document.createElement("h3");
  head.textContent = title;
  section.append(head);
  const entries = Object.entries(breakdown).sort((a, b) => b[1] - a[1] || a[0].localeCompare(b[0]));
  for (const [key, count] of entries) {
    const row = document.createElement("div");
    row.className = "bar-row";
    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = key || "(none)";
    const bar = document.createElement("span");
    bar.className = "bar";
    bar.style.width = total ? `${Math.max(2, Math.round((count / total) * 100))}%` : "0";
    const value = document.createElement("span");
    value.className = "bar-value";
    value.textContent = String(count);
    row.append(label, bar, value);
    section.append(row);
  }
  return section;
}

export function renderReport(container: HTMLElement, report: Report): void {
  container.textContent = "";
  const head = document.createElement("h2");
  head.textContent = `lexicon: ${report.size} entries`;
  const sub = document.createElement("p");
  sub.className = "muted";
  sub.textContent = `${report.derived_count} derived · ${report.underived_count} underived`;
  container.append(head, sub);
  container.append(axis("loan type", report.by_loan_type, report.size));
  container.append(axis("part of speech", report.by_pos, report.size));
  container.append(axis("derivation", report.by_deriv_type, report.size));
  container.append(axis("topic", report.by_topic, report.size));
  container.append(axis("model", report.by_model, report.size));
}
