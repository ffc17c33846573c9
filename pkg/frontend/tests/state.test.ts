import { describe, expect, it } from "vitest";

import {
  charCount,
  defaultState,
  isValid,
  parameterEcho,
  parseNumeric,
  validate,
  wordCount,
} from "../src/state.js";

describe("counters", () => {
  it("counts words on whitespace", () => {
    expect(wordCount("a b c")).toBe(3);
    expect(wordCount("  a   b\nc  ")).toBe(3);
    expect(wordCount("")).toBe(0);
    expect(wordCount("   ")).toBe(0);
  });

  it("counts characters verbatim", () => {
    expect(charCount("a b c")).toBe(5);
    expect(charCount("")).toBe(0);
  });
});

describe("validation", () => {
  it("accepts the defaults", () => {
    const state = defaultState();
    expect(wordCount(state.reviewText)).toBeGreaterThanOrEqual(state.budget);
    expect(isValid(state)).toBe(true);
  });

  it("rejects alpha outside [0, 1]", () => {
    const state = { ...defaultState(), alpha: 1.5 };
    expect(validate(state).alpha).toMatch(/between 0 and 1/);
    expect(isValid({ ...state, alpha: Number.NaN })).toBe(false);
    expect(isValid({ ...state, alpha: 1.0 })).toBe(true);
  });

  it("rejects negative r", () => {
    expect(validate({ ...defaultState(), r: -0.5 }).r).toBeTruthy();
    expect(validate({ ...defaultState(), r: 0 }).r).toBeUndefined();
  });

  it("rejects a budget above the word count", () => {
    const state = { ...defaultState(), reviewText: "just five words sit here", budget: 500 };
    expect(validate(state).budget).toMatch(/word count/);
    expect(isValid({ ...state, budget: 5 })).toBe(true);
  });

  it("rejects fractional or negative budgets", () => {
    expect(validate({ ...defaultState(), budget: 10.5 }).budget).toBeTruthy();
    expect(validate({ ...defaultState(), budget: -1 }).budget).toBeTruthy();
  });

  it("requires review text", () => {
    expect(validate({ ...defaultState(), reviewText: "  " }).reviewText).toBeTruthy();
  });
});

describe("parameter echo", () => {
  it("formats the output header line", () => {
    const state = { ...defaultState(), functionChoice: "a1" as const, alpha: 0.5, r: 1.0 };
    expect(parameterEcho(state)).toBe("Function= A1 α = 0.5 r = 1");
  });

  it("upcases the function name", () => {
    const state = { ...defaultState(), functionChoice: "a4" as const, alpha: 0.25, r: 0 };
    expect(parameterEcho(state)).toMatch(/^Function= A4 /);
  });
});

describe("numeric parsing", () => {
  it("parses plain numbers and rejects junk", () => {
    expect(parseNumeric("0.75")).toBe(0.75);
    expect(parseNumeric(" 2 ")).toBe(2);
    expect(parseNumeric("abc")).toBeNull();
    expect(parseNumeric("")).toBeNull();
  });
});
