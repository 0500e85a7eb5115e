// Paged candidate queue: a read-only mirror of GET /api/candidates.

import type { CandidatePage, CandidateSummary } from "./types.js";

export const PAGE_SIZE = 50;

export function pageCount(total: number, pageSize: number = PAGE_SIZE): number {
  return Math.ceil(total / pageSize);
}

export interface QueueHandlers {
  onSelect: (lemma: string) => void;
  onPage: (page: number) => void;
}

function flagBadges(item: CandidateSummary): string[] {
  const badges = [...item.auto_flags];
  if (item.in_reference) badges.push("in_reference");
  if (item.needs_review) badges.push("check");
  return badges;
}

export function renderQueue(
  container: HTMLElement,
  page: CandidatePage,
  selected: string | null,
  handlers: QueueHandlers,
): void {
  container.textContent = "";
  const list = document.createElement("ul");
  list.className = "queue-list";
  for (const item of page.items) {
    const row = document.createElement("li");
    row.className = "queue-row";
    row.dataset["lemma"] = item.lemma;
    if (item.lemma === selected) row.classList.add("selected");
    row.classList.add(`status-${item.status}`);

    const lemma = document.createElement("span");
    lemma.className = "lemma";
    lemma.textContent = item.lemma;
    const freq = document.createElement("span");
    freq.className = "freq";
    freq.textContent = String(item.freq);
    row.append(lemma, freq);

    for (const badge of flagBadges(item)) {
      const b = document.createElement("span");
      b.className = "badge";
      b.textContent = badge;
      row.append(b);
    }
    row.addEventListener("click", () => handlers.onSelect(item.lemma));
    list.append(row);
  }
  container.append(list);

  const pages = pageCount(page.total, page.limit);
  const current = Math.floor(page.offset / page.limit);
  const nav = document.createElement("div");
  nav.className = "pager";
  const info = document.createElement("span");
  info.textContent = pages === 0 ? "empty" : `page ${current + 1} of ${pages} (${page.total})`;
  const prev = document.createElement("button");
  prev.textContent = "‹ prev";
  prev.disabled = current <= 0;
  prev.addEventListener("click", () => handlers.onPage(current - 1));
  const next = document.createElement("button");
  next.textContent = "next ›";
  next.disabled = current >= pages - 1;
  next.addEventListener("click", () => handlers.onPage(current + 1));
  nav.append(prev, info, next);
  container.append(nav);
}
