// Decision form: action, reject reason, and the five label axes.
// Suggested labels are pre-filled but nothing is ever auto-submitted;
// submit stays disabled until the server-side invariants hold client-side.

import type { Action, CandidateDetail, DecisionBody, Labels, RejectReason } from "./types.js";
import { DERIV_VALUES, LOAN_VALUES, POS_VALUES, REJECT_REASONS, emptyLabels } from "./types.js";
import { buildDecision, decisionReady, validateDecision } from "./validate.js";

type SubmitHandler = (lemma: string, body: DecisionBody) => void;

function option(value: string, label?: string): HTMLOptionElement {
  const el = document.createElement("option");
  el.value = value;
  el.textContent = label ?? value;
  return el;
}

function labeled(text: string, field: HTMLElement, errorId: string): HTMLElement {
  const wrap = document.createElement("label");
  wrap.className = "field";
  const caption = document.createElement("span");
  caption.textContent = text;
  const error = document.createElement("em");
  error.className = "field-error";
  error.id = errorId;
  wrap.append(caption, field, error);
  return wrap;
}

export class DecisionForm {
  readonly root: HTMLFormElement;
  private lemma: string | null = null;
  private readonly topics: string[];
  private readonly reviewerInput: HTMLInputElement;
  private readonly actionSelect: HTMLSelectElement;
  private readonly reasonSelect: HTMLSelectElement;
  private readonly posSelect: HTMLSelectElement;
  private readonly topicSelect: HTMLSelectElement;
  private readonly loanSelect: HTMLSelectElement;
  private readonly derivSelect: HTMLSelectElement;
  private readonly modelInput: HTMLInputElement;
  private readonly submitButton: HTMLButtonElement;
  private readonly onSubmit: SubmitHandler;

  constructor(topics: string[], onSubmit: SubmitHandler) {
    this.topics = topics;
    this.onSubmit = onSubmit;
    this.root = document.createElement("form");
    this.root.className = "decision-form";
    this.root.addEventListener("submit", (ev) => {
      ev.preventDefault();
      this.submit();
    });

    this.actionSelect = document.createElement("select");
    for (const action of ["accept", "reject", "relabel", "reopen"]) {
      this.actionSelect.append(option(action));
    }
    this.reasonSelect = document.createElement("select");
    this.reasonSelect.append(option("", "—"));
    for (const reason of REJECT_REASONS) this.reasonSelect.append(option(reason));

    this.posSelect = document.createElement("select");
    this.posSelect.append(option("", "—"));
    for (const pos of POS_VALUES) this.posSelect.append(option(pos));

    this.topicSelect = document.createElement("select");
    this.topicSelect.append(option("", "—"));
    for (const topic of topics) this.topicSelect.append(option(topic));

    this.loanSelect = document.createElement("select");
    this.loanSelect.append(option("", "—"));
    for (const loan of LOAN_VALUES) this.loanSelect.append(option(loan));

    this.derivSelect = document.createElement("select");
    this.derivSelect.append(option("", "—"));
    for (const deriv of DERIV_VALUES) this.derivSelect.append(option(deriv));

    this.modelInput = document.createElement("input");
    this.modelInput.type = "text";
    this.modelInput.placeholder = "ST-к, за-ST-и, ST-о-ST…";

    this.reviewerInput = document.createElement("input");
    this.reviewerInput.type = "text";
    this.reviewerInput.value = "reviewer";

    this.submitButton = document.createElement("button");
    this.submitButton.type = "submit";
    this.submitButton.textContent = "submit decision";

    this.root.append(
      labeled("action", this.actionSelect, "err-action"),
      labeled("reject reason", this.reasonSelect, "err-reject_reason"),
      labeled("part of speech", this.posSelect, "err-pos"),
      labeled("topic", this.topicSelect, "err-topic"),
      labeled("loan type", this.loanSelect, "err-loan_type"),
      labeled("derivation", this.derivSelect, "err-deriv_type"),
      labeled("model", this.modelInput, "err-model"),
      labeled("reviewer", this.reviewerInput, "err-reviewer"),
      this.submitButton,
    );
    for (const el of [this.actionSelect, this.reasonSelect, this.posSelect, this.topicSelect,
                      this.loanSelect, this.derivSelect, this.modelInput]) {
      el.addEventListener("input", () => this.refresh());
      el.addEventListener("change", () => this.refresh());
    }
    this.refresh();
  }

  get action(): Action {
    return this.actionSelect.value as Action;
  }

  setAction(action: Action): void {
    this.actionSelect.value = action;
    this.refresh();
  }

  /** Load a candidate: existing labels win over suggestions; never auto-submit. */
  load(candidate: CandidateDetail): void {
    this.lemma = candidate.lemma;
    const source = candidate.labels ?? candidate.suggested ?? emptyLabels();
    this.posSelect.value = source.pos ?? "";
    this.topicSelect.value = source.topic ?? "";
    this.loanSelect.value = source.loan_type ?? "";
    this.derivSelect.value = source.deriv_type ?? "";
    this.modelInput.value = source.model ?? "";
    this.reasonSelect.value = "";
    this.actionSelect.value = candidate.status === "pending" ? "accept" : "relabel";
    this.refresh();
  }

  labels(): Labels {
    return {
      pos: (this.posSelect.value || null) as Labels["pos"],
      topic: this.topicSelect.value || null,
      loan_type: (this.loanSelect.value || null) as Labels["loan_type"],
      deriv_type: (this.derivSelect.value || null) as Labels["deriv_type"],
      model: this.modelInput.value.trim() || null,
    };
  }

  rejectReason(): RejectReason | null {
    return (this.reasonSelect.value || null) as RejectReason | null;
  }

  ready(): boolean {
    return this.lemma !== null && decisionReady(this.action, this.rejectReason(), this.labels(), this.topics);
  }

  refresh(): void {
    const errors = this.lemma === null
      ? {}
      : validateDecision(this.action, this.rejectReason(), this.labels(), this.topics);
    for (const el of this.root.querySelectorAll<HTMLElement>(".field-error")) {
      const field = el.id.replace(/^err-/, "");
      el.textContent = errors[field] ?? "";
    }
    this.submitButton.disabled = !this.ready();
  }

  /** Server-side 422 details land on the form too. */
  showServerError(detail: string): void {
    const el = this.root.querySelector<HTMLElement>("#err-action");
    if (el) el.textContent = detail;
  }

  submit(): boolean {
    if (this.lemma === null || !this.ready()) return false;
    const body = buildDecision(this.action, this.rejectReason(), this.labels(),
                               this.reviewerInput.value.trim() || "anonymous");
    this.onSubmit(this.lemma, body);
    return true;
  }
}
