export type EducationToken = "high_school" | "bachelors";

export type MatchKind = "simple" | "partial";

export type Segment = {
  level: string;
  stream: string;
  university?: string;
  duration_years?: number;
};

export type SuggestionItem = {
  path: string;
  segments: Segment[];
  score: number;
  match_kind: MatchKind;
  matched_position: string;
  source_record: string;
};

export type SuggestResponse = {
  query: { goal: string; education: EducationToken };
  suggestions: SuggestionItem[];
};

export type HealthResponse = {
  status: string;
  records: number;
};

export type FormStatus = "idle" | "loading" | "loaded" | "error";
