import { describe, expect, test } from "vitest";

import { emptyLabels, type Labels } from "../src/types.js";
import { MODEL_GRAMMAR, decisionReady, labelsComplete, validateDecision, validateLabels } from "../src/validate.js";

const TOPICS = ["интернет", "оценка", "техника"];

function full(overrides: Partial<Labels> = {}): Labels {
  return {
    pos: "V",
    topic: "интернет",
    loan_type: "Смешанное",
    deriv_type: "Суффикс",
    model: "ST-а",
    ...overrides,
  };
}

describe("model grammar", () => {
  test.each(["ST-к", "за-ST-и", "ST-о-ST", "ST-ч-айш", "пере-ST", "ST-ST", "ST"])(
    "accepts %s",
    (model) => {
      expect(MODEL_GRAMMAR.test(model)).toBe(true);
    },
  );

  test.each(["STX", "st-к", "за-ST-", "-ST", "ST-K", "ST--к", "модель"])(
    "rejects %s",
    (model) => {
      expect(MODEL_GRAMMAR.test(model)).toBe(false);
    },
  );
});

describe("label completeness", () => {
  test("underived needs pos, topic, loan type and no model", () => {
    expect(labelsComplete(full({ deriv_type: null, model: null }))).toBe(true);
    expect(labelsComplete(full({ deriv_type: "Underived", model: null }))).toBe(true);
    expect(labelsComplete(full({ deriv_type: "Underived" }))).toBe(false);
  });

  test("derived requires a model", () => {
    expect(labelsComplete(full())).toBe(true);
    expect(labelsComplete(full({ model: null }))).toBe(false);
  });

  test("missing axes are incomplete", () => {
    expect(labelsComplete(full({ topic: null }))).toBe(false);
    expect(labelsComplete(full({ pos: null }))).toBe(false);
    expect(labelsComplete(full({ loan_type: null }))).toBe(false);
  });
});

describe("decision validation", () => {
  test("accept with complete labels is ready", () => {
    expect(decisionReady("accept", null, full(), TOPICS)).toBe(true);
  });

  test("accept with incomplete labels is blocked", () => {
    expect(decisionReady("accept", null, full({ topic: null }), TOPICS)).toBe(false);
  });

  test("unknown topic is an error", () => {
    const errors = validateLabels(full({ topic: "космос" }), TOPICS);
    expect(errors["topic"]).toBeTruthy();
  });

  test("reject without a reason is blocked client-side", () => {
    expect(decisionReady("reject", null, emptyLabels(), TOPICS)).toBe(false);
    expect(decisionReady("reject", "proper_noun", emptyLabels(), TOPICS)).toBe(true);
  });

  test("relabel needs at least one label", () => {
    expect(decisionReady("relabel", null, emptyLabels(), TOPICS)).toBe(false);
    const only = { ...emptyLabels(), topic: "оценка" };
    expect(decisionReady("relabel", null, only, TOPICS)).toBe(true);
  });

  test("reopen is always ready", () => {
    expect(decisionReady("reopen", null, emptyLabels(), TOPICS)).toBe(true);
  });

  test("bad model string reported on the model field", () => {
    const errors = validateDecision("accept", null, full({ model: "оченьплохо" }), TOPICS);
    expect(errors["model"]).toContain("model grammar");
  });
});
