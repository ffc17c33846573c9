import { DEFAULT_REVIEW } from "./defaultReview.js";

export type FunctionChoice = "a1" | "a2" | "a3" | "a4" | "a5";

export const FUNCTION_LABELS: Record<FunctionChoice, string> = {
  a1: "A1: Modular",
  a2: "A2: Budget-additive",
  a3: "A3: Polarity budget-additive",
  a4: "A4: Facility location",
  a5: "A5: Polarity facility location",
};

export interface FormState {
  functionChoice: FunctionChoice;
  alpha: number;
  r: number;
  budget: number;
  reviewText: string;
}

export function defaultState(): FormState {
  return {
    functionChoice: "a1",
    alpha: 0.5,
    r: 1.0,
    budget: 200,
    reviewText: DEFAULT_REVIEW,
  };
}

export function wordCount(text: string): number {
  const trimmed = text.trim();
  return trimmed === "" ? 0 : trimmed.split(/\s+/).length;
}

export function charCount(text: string): number {
  return text.length;
}

export interface FieldErrors {
  alpha?: string;
  r?: string;
  budget?: string;
  reviewText?: string;
}

/** Validate the whole form; an empty result means it can be submitted. */
export function validate(state: FormState): FieldErrors {
  const errors: FieldErrors = {};
  if (!Number.isFinite(state.alpha) || state.alpha < 0 || state.alpha > 1) {
    errors.alpha = "α must be a number between 0 and 1";
  }
  if (!Number.isFinite(state.r) || state.r < 0) {
    errors.r = "r must be a number ≥ 0";
  }
  if (!Number.isInteger(state.budget) || state.budget < 0) {
    errors.budget = "budget must be a whole number ≥ 0";
  }
  if (state.reviewText.trim() === "") {
    errors.reviewText = "enter a review to summarize";
  } else if (!errors.budget && state.budget > wordCount(state.reviewText)) {
    errors.budget = "budget must not exceed the word count";
  }
  return errors;
}

export function isValid(state: FormState): boolean {
  return Object.keys(validate(state)).length === 0;
}

/** The output page's parameter line, e.g. "Function= A1 α = 0.5 r = 1.0". */
export function parameterEcho(state: FormState): string {
  return `Function= ${state.functionChoice.toUpperCase()} α = ${state.alpha} r = ${state.r}`;
}

/** Parse a free-form numeric field; null when not a number. */
export function parseNumeric(raw: string): number | null {
  const trimmed = raw.trim();
  if (trimmed === "") {
    return null;
  }
  const value = Number(trimmed);
  return Number.isFinite(value) ? value : null;
}
