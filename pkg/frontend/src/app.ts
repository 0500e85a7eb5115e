// Application controller: queue + detail + decision form + live report.
// Keyboard-first triage: a = accept, r = reject, n = next pending.
// The server log is the single source of truth; the app only caches views.

import { ApiError, getCandidate, getMeta, getReport, listCandidates, postDecision } from "./api.js";
import { renderDetail } from "./detail.js";
import { DecisionForm } from "./form.js";
import { PAGE_SIZE, renderQueue } from "./queue.js";
import { renderReport } from "./report.js";
import type { CandidateDetail, CandidatePage, DecisionBody, Status } from "./types.js";

export interface AppElements {
  banner: HTMLElement;
  tabs: HTMLElement;
  queue: HTMLElement;
  detail: HTMLElement;
  form: HTMLElement;
  report: HTMLElement;
  sortSelect: HTMLSelectElement;
}

const STATUSES: Status[] = ["pending", "accepted", "rejected"];

export class App {
  private readonly els: AppElements;
  private form: DecisionForm | null = null;
  private topics: string[] = [];
  filter: Status = "pending";
  sort: "freq" | "lemma" = "freq";
  page = 0;
  current: CandidateDetail | null = null;
  private lastPage: CandidatePage | null = null;

  constructor(els: AppElements) {
    this.els = els;
    this.els.sortSelect.addEventListener("change", () => {
      this.sort = this.els.sortSelect.value === "lemma" ? "lemma" : "freq";
      void this.refreshQueue();
    });
    this.renderTabs();
  }

  async start(): Promise<void> {
    try {
      const meta = await getMeta();
      this.topics = meta.topics;
      this.form = new DecisionForm(this.topics, (lemma, body) => void this.submit(lemma, body));
      this.els.form.textContent = "";
      this.els.form.append(this.form.root);
      this.clearBanner();
    } catch (err) {
      this.showBanner(err);
      return; // surface the failure; no silent retry loop
    }
    document.addEventListener("keydown", (ev) => this.onKey(ev));
    await this.refreshQueue();
    await this.refreshReport();
  }

  private renderTabs(): void {
    this.els.tabs.textContent = "";
    for (const status of STATUSES) {
      const tab = document.createElement("button");
      tab.textContent = status;
      tab.dataset["status"] = status;
      tab.className = status === this.filter ? "tab active" : "tab";
      tab.addEventListener("click", () => {
        this.filter = status;
        this.page = 0;
        this.renderTabs();
        void this.refreshQueue();
      });
      this.els.tabs.append(tab);
    }
  }

  showBanner(err: unknown): void {
    const message = err instanceof ApiError
      ? (err.status === 0 ? `service unreachable: ${err.detail}` : `error ${err.status}: ${err.detail}`)
      : String(err);
    this.els.banner.textContent = message;
    this.els.banner.classList.add("visible");
  }

  clearBanner(): void {
    this.els.banner.textContent = "";
    this.els.banner.classList.remove("visible");
  }

  async refreshQueue(): Promise<void> {
    try {
      const page = await listCandidates({
        status: this.filter,
        sort: this.sort,
        offset: this.page * PAGE_SIZE,
        limit: PAGE_SIZE,
      });
      this.lastPage = page;
      renderQueue(this.els.queue, page, this.current?.lemma ?? null, {
        onSelect: (lemma) => void this.select(lemma),
        onPage: (p) => {
          this.page = Math.max(0, p);
          void this.refreshQueue();
        },
      });
      this.clearBanner();
    } catch (err) {
      this.showBanner(err);
    }
  }

  async refreshReport(): Promise<void> {
    try {
      renderReport(this.els.report, await getReport());
    } catch (err) {
      this.showBanner(err);
    }
  }

  async select(lemma: string): Promise<void> {
    try {
      const candidate = await getCandidate(lemma);
      this.current = candidate;
      renderDetail(this.els.detail, candidate);
      this.form?.load(candidate);
      if (this.lastPage) {
        renderQueue(this.els.queue, this.lastPage, lemma, {
          onSelect: (l) => void this.select(l),
          onPage: (p) => {
            this.page = Math.max(0, p);
            void this.refreshQueue();
          },
        });
      }
      this.clearBanner();
    } catch (err) {
      this.showBanner(err);
      if (err instanceof ApiError && err.status === 404) {
        await this.refreshQueue();
      }
    }
  }

  /** First pending candidate after the current one (wrapping), if any. */
  nextPendingLemma(): string | null {
    const items = this.lastPage?.items ?? [];
    const pending = items.filter((i) => i.status === "pending" && i.lemma !== this.current?.lemma);
    if (!pending.length) return null;
    const order = items.map((i) => i.lemma);
    const after = this.current ? order.indexOf(this.current.lemma) : -1;
    const following = pending.find((i) => order.indexOf(i.lemma) > after);
    return (following ?? pending[0])?.lemma ?? null;
  }

  async submit(lemma: string, body: DecisionBody): Promise<void> {
    const row = this.els.queue.querySelector<HTMLElement>(`[data-lemma="${lemma}"]`);
    const optimistic = body.action === "accept" ? "status-accepted"
      : body.action === "reject" ? "status-rejected" : null;
    if (row && optimistic) {
      row.classList.remove("status-pending");
      row.classList.add(optimistic); // rolled back by the refresh on error
    }
    try {
      const result = await postDecision(lemma, body);
      this.clearBanner();
      const next = this.nextPendingLemma();
      await this.refreshQueue();
      await this.refreshReport();
      if (body.action === "accept" || body.action === "reject") {
        if (next) {
          await this.select(next);
        } else {
          this.current = { ...result.candidate, contexts: result.candidate.contexts ?? [] };
          renderDetail(this.els.detail, this.current);
        }
      } else {
        await this.select(lemma);
      }
    } catch (err) {
      await this.refreshQueue(); // roll back the optimistic row state
      if (err instanceof ApiError && err.status === 422) {
        this.form?.showServerError(err.detail);
        this.showBanner(err);
      } else if (err instanceof ApiError && err.status === 404) {
        this.showBanner(err);
      } else {
        this.showBanner(err);
      }
    }
  }

  onKey(ev: KeyboardEvent): void {
    const target = ev.target as HTMLElement | null;
    if (target && (target.tagName === "INPUT" || target.tagName === "SELECT" || target.tagName === "TEXTAREA")) {
      return; // never steal keys from form fields
    }
    if (!this.form || !this.current) return;
    if (ev.key === "a") {
      this.form.setAction("accept");
      this.form.submit();
      ev.preventDefault();
    } else if (ev.key === "r") {
      this.form.setAction("reject");
      if (!this.form.submit()) {
        // resolve focus to the reason field so the reviewer can pick one
        this.form.root.querySelectorAll("select")[1]?.focus();
      }
      ev.preventDefault();
    } else if (ev.key === "n") {
      const next = this.nextPendingLemma();
      if (next) void this.select(next);
      ev.preventDefault();
    }
  }
}
