import { ApiError, PostSummarize, postSummarize } from "./api.js";
import {
  FormState,
  FunctionChoice,
  charCount,
  defaultState,
  parameterEcho,
  parseNumeric,
  validate,
  wordCount,
} from "./state.js";

/** Handle returned by init so tests can poke at the live state. */
export interface AppHandle {
  getState(): FormState;
  elements: Elements;
}

interface Elements {
  inputView: HTMLElement;
  outputView: HTMLElement;
  form: HTMLFormElement;
  functionSelect: HTMLSelectElement;
  alphaSlider: HTMLInputElement;
  alphaText: HTMLInputElement;
  rInput: HTMLInputElement;
  budgetInput: HTMLInputElement;
  review: HTMLTextAreaElement;
  wordCounter: HTMLElement;
  charCounter: HTMLElement;
  okButton: HTMLButtonElement;
  banner: HTMLElement;
  alphaError: HTMLElement;
  rError: HTMLElement;
  budgetError: HTMLElement;
  reviewError: HTMLElement;
  paramEcho: HTMLElement;
  originalText: HTMLElement;
  summaryText: HTMLElement;
  homeLink: HTMLElement;
}

function grab(doc: Document): Elements {
  const byId = <T extends HTMLElement>(id: string): T => {
    const el = doc.getElementById(id);
    if (!el) {
      throw new Error(`missing element #${id}`);
    }
    return el as T;
  };
  return {
    inputView: byId("input-view"),
    outputView: byId("output-view"),
    form: byId<HTMLFormElement>("form"),
    functionSelect: byId<HTMLSelectElement>("function"),
    alphaSlider: byId<HTMLInputElement>("alpha-slider"),
    alphaText: byId<HTMLInputElement>("alpha-text"),
    rInput: byId<HTMLInputElement>("r-input"),
    budgetInput: byId<HTMLInputElement>("budget-input"),
    review: byId<HTMLTextAreaElement>("review"),
    wordCounter: byId("word-count"),
    charCounter: byId("char-count"),
    okButton: byId<HTMLButtonElement>("ok"),
    banner: byId("banner"),
    alphaError: byId("alpha-error"),
    rError: byId("r-error"),
    budgetError: byId("budget-error"),
    reviewError: byId("review-error"),
    paramEcho: byId("param-echo"),
    originalText: byId("original-text"),
    summaryText: byId("summary-text"),
    homeLink: byId("home-link"),
  };
}

export function init(
  doc: Document,
  api: PostSummarize = postSummarize,
  baseUrl = "",
): AppHandle {
  const el = grab(doc);
  const state = defaultState();
  let pending = false;

  const refresh = () => {
    el.wordCounter.textContent = `${wordCount(state.reviewText)} words`;
    el.charCounter.textContent = `${charCount(state.reviewText)} characters`;
    const errors = validate(state);
    el.alphaError.textContent = errors.alpha ?? "";
    el.rError.textContent = errors.r ?? "";
    el.budgetError.textContent = errors.budget ?? "";
    el.reviewError.textContent = errors.reviewText ?? "";
    el.okButton.disabled = pending || Object.keys(errors).length > 0;
  };

  const showView = (view: "input" | "output") => {
    el.inputView.classList.toggle("hidden", view !== "input");
    el.outputView.classList.toggle("hidden", view !== "output");
  };

  // Initial form contents.
  el.functionSelect.value = state.functionChoice;
  el.alphaSlider.value = String(state.alpha);
  el.alphaText.value = String(state.alpha);
  el.rInput.value = String(state.r);
  el.budgetInput.value = String(state.budget);
  el.review.value = state.reviewText;
  refresh();

  el.functionSelect.addEventListener("change", () => {
    state.functionChoice = el.functionSelect.value as FunctionChoice;
    refresh();
  });

  // The slider and the text box always show the same value.
  el.alphaSlider.addEventListener("input", () => {
    state.alpha = Number(el.alphaSlider.value);
    el.alphaText.value = el.alphaSlider.value;
    refresh();
  });
  el.alphaText.addEventListener("input", () => {
    const value = parseNumeric(el.alphaText.value);
    state.alpha = value ?? Number.NaN;
    if (value !== null && value >= 0 && value <= 1) {
      el.alphaSlider.value = String(value);
    }
    refresh();
  });

  el.rInput.addEventListener("input", () => {
    state.r = parseNumeric(el.rInput.value) ?? Number.NaN;
    refresh();
  });
  el.budgetInput.addEventListener("input", () => {
    state.budget = parseNumeric(el.budgetInput.value) ?? Number.NaN;
    refresh();
  });
  el.review.addEventListener("input", () => {
    state.reviewText = el.review.value;
    refresh();
  });

  el.form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (pending || Object.keys(validate(state)).length > 0) {
      return;
    }
    pending = true;
    el.banner.classList.add("hidden");
    refresh();
    api(baseUrl, {
      text: state.reviewText,
      function: state.functionChoice,
      alpha: state.alpha,
      r: state.r,
      budget: state.budget,
    })
      .then((result) => {
        el.paramEcho.textContent = parameterEcho(state);
        // The submitted review is shown back verbatim, never the server's copy.
        el.originalText.textContent = state.reviewText;
        el.summaryText.textContent = result.summary;
        showView("output");
      })
      .catch((error: unknown) => {
        if (error instanceof ApiError && error.field) {
          const slot = {
            alpha: el.alphaError,
            r: el.rError,
            budget: el.budgetError,
            text: el.reviewError,
            function: el.banner,
          }[error.field];
          if (slot && slot !== el.banner) {
            slot.textContent = error.message;
            return;
          }
        }
        el.banner.textContent = "The service is unavailable. Your input is unchanged; try again.";
        el.banner.classList.remove("hidden");
      })
      .finally(() => {
        pending = false;
        el.okButton.disabled = Object.keys(validate(state)).length > 0;
      });
  });

  el.homeLink.addEventListener("click", (event) => {
    event.preventDefault();
    showView("input");  // form state is untouched, ready to re-tune
  });

  return { getState: () => ({ ...state }), elements: el };
}
