// Wire types mirroring the review service JSON API. The UI never computes
// classifications; these are read-only views of server payloads.

export type Status = "pending" | "accepted" | "rejected";

export type Action = "accept" | "reject" | "relabel" | "reopen";

export type RejectReason =
  | "proper_noun"
  | "non_russian"
  | "lemmatizer_artifact"
  | "in_reference"
  | "other";

export const POS_VALUES = ["N", "Nmod", "Nmod/N", "Adj", "V", "Adv/Pred", "Interj", "Unknown"] as const;
export type Pos = (typeof POS_VALUES)[number];

export const LOAN_VALUES = [
  "Англицизм",
  "Галлицизм",
  "Исконное",
  "Из заимств. корней",
  "Смешанное",
] as const;
export type LoanType = (typeof LOAN_VALUES)[number];

export const DERIV_VALUES = ["Underived", "Суффикс", "Префикс", "Префикс+суффикс", "Композит"] as const;
export type DerivType = (typeof DERIV_VALUES)[number];

export const REJECT_REASONS: RejectReason[] = [
  "proper_noun",
  "non_russian",
  "lemmatizer_artifact",
  "in_reference",
  "other",
];

export interface Labels {
  pos: Pos | null;
  topic: string | null;
  loan_type: LoanType | null;
  deriv_type: DerivType | null;
  model: string | null;
}

export interface CandidateSummary {
  lemma: string;
  pos: string;
  freq: number;
  auto_flags: string[];
  in_reference: boolean;
  status: Status;
  reject_reason: RejectReason | null;
  labels: Labels | null;
  suggested: Labels | null;
  needs_review: boolean;
}

export interface CandidateDetail extends CandidateSummary {
  contexts: string[];
}

export interface CandidatePage {
  total: number;
  offset: number;
  limit: number;
  items: CandidateSummary[];
}

export interface DecisionBody {
  action: Action;
  reject_reason?: RejectReason | null;
  labels?: Labels | null;
  reviewer?: string;
}

export interface Report {
  size: number;
  by_pos: Record<string, number>;
  by_loan_type: Record<string, number>;
  by_deriv_type: Record<string, number>;
  by_model: Record<string, number>;
  by_topic: Record<string, number>;
  underived_count: number;
  derived_count: number;
}

export interface Meta {
  topics: string[];
  total: number;
  by_status: Record<Status, number>;
  decision_count: number;
}

export function emptyLabels(): Labels {
  return { pos: null, topic: null, loan_type: null, deriv_type: null, model: null };
}
