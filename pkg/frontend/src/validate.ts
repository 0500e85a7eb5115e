// Client-side mirror of the review invariants: the submit button stays
// disabled until a decision would be accepted by the server.

import type { Action, DecisionBody, Labels, RejectReason } from "./types.js";

// Derivation model strings: optional prefix, ST, suffix chain, optional second stem.
export const MODEL_GRAMMAR = /^([а-яё]+-)?ST(-[а-яё]+)*(-ST)?$/;

export interface FieldErrors {
  [field: string]: string;
}

export function labelsComplete(labels: Labels): boolean {
  if (!labels.pos || !labels.topic || !labels.loan_type) return false;
  const derived = labels.deriv_type !== null && labels.deriv_type !== "Underived";
  return (labels.model !== null && labels.model !== "") === derived;
}

export function validateLabels(labels: Labels, topics: string[]): FieldErrors {
  const errors: FieldErrors = {};
  if (labels.topic && !topics.includes(labels.topic)) {
    errors["topic"] = "unknown topic";
  }
  if (labels.model && !MODEL_GRAMMAR.test(labels.model)) {
    errors["model"] = "must match the model grammar, e.g. за-ST-и or ST-о-ST";
  }
  const derived = labels.deriv_type !== null && labels.deriv_type !== "Underived";
  if (derived && !labels.model) {
    errors["model"] = "derived entries need a model string";
  }
  if (!derived && labels.model) {
    errors["deriv_type"] = "a model string needs a derivation type";
  }
  return errors;
}

export function validateDecision(
  action: Action,
  rejectReason: RejectReason | null,
  labels: Labels,
  topics: string[],
): FieldErrors {
  const errors: FieldErrors = {};
  if (action === "accept") {
    Object.assign(errors, validateLabels(labels, topics));
    if (!labelsComplete(labels)) {
      for (const field of ["pos", "topic", "loan_type"] as const) {
        if (!labels[field]) errors[field] = "required to accept";
      }
      if (!errors["model"] && !labelsComplete(labels)) {
        errors["model"] = "labels incomplete";
      }
    }
  } else if (action === "reject") {
    if (!rejectReason) errors["reject_reason"] = "required to reject";
  } else if (action === "relabel") {
    Object.assign(errors, validateLabels(labels, topics));
    const touched = Object.values(labels).some((v) => v !== null && v !== "");
    if (!touched) errors["labels"] = "relabel needs at least one label";
  }
  return errors;
}

export function decisionReady(
  action: Action,
  rejectReason: RejectReason | null,
  labels: Labels,
  topics: string[],
): boolean {
  return Object.keys(validateDecision(action, rejectReason, labels, topics)).length === 0;
}

export function buildDecision(
  action: Action,
  rejectReason: RejectReason | null,
  labels: Labels,
  reviewer: string,
): DecisionBody {
  const body: DecisionBody = { action, reviewer };
  if (action === "reject") body.reject_reason = rejectReason;
  if (action === "accept" || action === "relabel") body.labels = labels;
  return body;
}
