// Copyright 2026 The Lingmark Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lingmark/toy_lm.h"

namespace lingmark {
namespace {

using Row = std::map<std::string, double>;

MarkovTagSource BuildDefaultGrammar() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> words = {
      {"DET",
       {"the", "a", "an", "this", "that", "these", "those", "every", "each",
        "some", "any", "no", "another", "either", "neither", "my", "your",
        "his", "our", "their", "its", "several", "many", "few", "both",
        "much"}},
      {"ADJ",
       {"big", "small", "old", "new", "red", "green", "quiet", "bright",
        "dark", "warm", "cold", "quick", "slow", "heavy", "light", "young",
        "strange", "simple", "clever", "gentle", "brave", "calm", "wild",
        "empty", "full", "rich", "poor", "tall", "short", "soft", "hard",
        "early", "late", "happy", "sad", "rare", "plain", "sharp", "narrow",
        "wide", "blue", "yellow", "white", "black", "brown", "grey",
        "golden", "silver", "pale", "deep", "shallow", "thick", "thin",
        "round", "flat", "smooth", "rough", "dry", "wet", "clean", "dirty",
        "fresh", "stale", "sweet", "bitter", "sour", "salty", "spicy",
        "loud", "silent", "busy", "lazy", "eager", "proud", "humble",
        "kind", "cruel", "honest", "polite", "rude", "curious", "careful",
        "careless", "famous", "hidden", "secret", "public", "private",
        "ancient", "modern", "distant", "nearby", "foreign", "local",
        "strong", "weak", "fierce", "tender", "broken", "whole", "tiny",
        "huge", "giant", "little", "large", "vast", "narrowest", "steep",
        "gentlest", "lonely", "friendly", "hungry", "thirsty", "tired",
        "sleepy", "awake", "angry", "cheerful", "gloomy", "anxious",
        "nervous", "patient", "restless", "serious", "funny", "odd",
        "ordinary", "unusual", "common", "precious", "cheap", "costly",
        "useful", "useless", "grand", "noble", "royal", "wooden", "iron",
        "glass", "woolen", "cotton", "leather", "frozen", "burning",
        "shiny", "dusty", "muddy", "sandy", "rocky", "grassy", "leafy",
        "snowy", "rainy", "windy", "sunny", "foggy", "stormy", "cloudy",
        "misty", "cozy", "tidy", "messy", "crowded", "lively", "dull",
        "vivid", "faint", "bold", "shy", "wise", "foolish", "graceful",
        "clumsy", "nimble", "sturdy", "fragile", "hollow", "solid", "crisp",
        "mellow", "rusty", "polished", "painted", "carved", "woven",
        "folded", "twisted", "crooked", "straight", "curved", "pointed",
        "blunt", "loose", "tight", "open", "closed", "final", "first",
        "last", "next", "previous", "main", "central", "northern",
        "southern", "eastern", "western", "inner", "outer", "upper",
        "lower", "hollowed", "wealthy", "needy", "modest", "grateful",
        "jealous", "loyal", "faithful", "fearless", "helpless", "hopeful",
        "hopeless", "restful", "peaceful", "playful", "thoughtful",
        "wonderful", "awful", "dreadful", "lovely", "ugly", "pretty",
        "handsome", "elegant", "shabby", "neat"}},
      {"NOUN",
       {"cat", "dog", "house", "river", "tree", "city", "garden", "window",
        "road", "letter", "teacher", "child", "market", "boat", "forest",
        "mountain", "song", "story", "table", "door", "bird", "horse",
        "village", "bridge", "lamp", "book", "field", "stone", "cloud",
        "train", "kitchen", "island", "student", "farmer", "painter",
        "doctor", "engine", "storm", "harbor", "valley", "candle", "mirror",
        "basket", "ladder", "wagon", "castle", "meadow", "shadow", "ocean",
        "desert", "pencil", "blanket", "orchard", "tower", "planet",
        "signal", "bottle", "jacket", "pocket", "ribbon", "apple", "bread",
        "cheese", "butter", "honey", "milk", "soup", "cake", "coffee",
        "tea", "sugar", "salt", "pepper", "onion", "carrot", "potato",
        "tomato", "lemon", "orange", "cherry", "grape", "melon", "peach",
        "plum", "berry", "flower", "rose", "tulip", "daisy", "lily",
        "grass", "leaf", "branch", "root", "seed", "fox", "wolf", "bear",
        "deer", "rabbit", "mouse", "owl", "eagle", "hawk", "crow",
        "sparrow", "swan", "duck", "goose", "hen", "cow", "sheep", "goat",
        "pig", "donkey", "mule", "lion", "tiger", "whale", "dolphin",
        "shark", "fish", "frog", "snake", "turtle", "lizard", "spider",
        "bee", "ant", "butterfly", "beetle", "moth", "worm", "snail",
        "crab", "oyster", "chair", "bed", "sofa", "shelf", "drawer",
        "cupboard", "carpet", "curtain", "pillow", "clock", "bell",
        "hammer", "nail", "rope", "chain", "key", "lock", "box", "bag",
        "cup", "plate", "bowl", "spoon", "fork", "knife", "kettle", "pot",
        "pan", "jar", "jug", "bucket", "barrel", "crate", "trunk",
        "suitcase", "umbrella", "hat", "coat", "shirt", "dress", "skirt",
        "boot", "shoe", "glove", "scarf", "belt", "ring", "necklace",
        "coin", "wallet", "ticket", "map", "compass", "lantern", "torch",
        "flag", "drum", "flute", "violin", "piano", "guitar", "trumpet",
        "painting", "statue", "poem", "novel", "diary", "newspaper",
        "magazine", "journal", "message", "note", "card", "photo",
        "picture", "postcard", "envelope", "parcel", "gift", "prize",
        "medal", "trophy", "crown", "sword", "shield", "arrow", "bow",
        "spear", "helmet", "armor", "king", "queen", "prince", "princess",
        "knight", "soldier", "sailor", "captain", "pilot", "driver",
        "baker", "butcher", "tailor", "miller", "hunter", "fisher",
        "shepherd", "merchant", "banker", "lawyer", "judge", "nurse",
        "singer", "dancer", "actor", "writer", "poet", "artist", "musician",
        "scholar", "priest", "monk", "neighbor", "friend", "stranger",
        "guest", "traveler", "pilgrim", "visitor", "servant", "master",
        "maiden", "widow", "orphan", "twin", "cousin", "uncle", "aunt",
        "nephew", "niece", "grandfather", "grandmother", "brother",
        "sister", "mother", "father", "daughter", "son", "baby", "girl",
        "boy", "man", "woman", "street", "lane", "path", "trail", "square",
        "park", "station", "airport", "hospital", "school", "library",
        "museum", "theater", "church", "temple", "palace", "cottage",
        "cabin", "barn", "stable", "mill", "factory", "shop", "bakery",
        "inn", "tavern", "hotel", "prison", "fortress", "wall", "gate",
        "fence", "roof", "chimney", "floor", "ceiling", "stair", "cellar",
        "attic", "hallway", "balcony", "porch", "yard", "pond", "lake",
        "stream", "brook", "waterfall", "spring", "well", "fountain",
        "hill", "cliff", "cave", "canyon", "ridge", "peak", "slope",
        "prairie", "swamp", "marsh", "jungle", "beach", "shore", "coast",
        "bay", "cape", "reef", "sky", "sun", "moon", "star", "comet",
        "rain", "snow", "wind", "thunder", "lightning", "fog", "mist",
        "frost", "ice", "flame", "smoke", "ash", "dust", "sand", "mud",
        "clay", "morning", "evening", "night", "noon", "midnight", "dawn",
        "dusk", "winter", "summer", "autumn", "season", "year", "month",
        "week", "day", "hour", "minute", "question", "answer", "problem",
        "idea", "plan", "dream", "memory", "promise", "lesson", "rule",
        "law", "reason", "choice", "chance", "mistake", "journey", "voyage",
        "adventure", "battle", "war", "peace", "victory", "defeat",
        "festival", "wedding", "funeral", "party", "meeting", "concert",
        "game", "puzzle", "riddle", "joke", "rumor", "legend", "myth",
        "tale", "fable", "melody", "rhythm", "voice", "whisper", "shout",
        "silence", "noise", "echo", "machine", "wheel", "gear", "lever",
        "motor", "pump", "pipe", "wire", "cable", "battery", "radio",
        "telephone", "computer", "camera", "screen", "button", "car",
        "truck", "bus", "bicycle", "ship", "canoe", "raft", "sled",
        "carriage", "tractor", "rocket", "balloon", "kite", "anchor",
        "sail", "mast", "oar", "deck", "coal", "oil", "gold", "copper",
        "steel", "tin", "marble", "granite", "crystal", "diamond", "pearl",
        "ruby", "emerald", "amber", "ivory", "wool", "silk", "linen",
        "velvet", "feather", "fur", "horn", "shell", "bone", "tooth",
        "claw", "tail", "wing", "beak", "nest", "egg"}},
      {"PROPN",
       {"Anna", "Boris", "Clara", "David", "Elena", "Felix", "Greta",
        "Hugo", "Irene", "Jonas", "Karla", "Leon", "Mira", "Nils", "Olga",
        "Pavel", "Rosa", "Simon", "Tara", "Victor", "Adam", "Bella", "Carl",
        "Dora", "Emil", "Flora", "Georg", "Hanna", "Ivan", "Julia", "Kurt",
        "Lena", "Marco", "Nora", "Oscar", "Paula", "Quinn", "Rita",
        "Stefan", "Tina", "Ulrich", "Vera", "Walter", "Xenia", "Yusuf",
        "Zora", "Alma", "Bruno", "Celia", "Dmitri", "Edith", "Frank",
        "Gloria", "Henrik", "Ida", "Jakob", "Klara", "Lukas", "Magda",
        "Niko", "Otto", "Petra", "Rafael", "Sonja", "Tomas", "Ursula",
        "Vincent", "Wanda", "Yara", "Zeno", "Agnes", "Bernd", "Cora",
        "Dario", "Erik", "Fiona", "Gustav", "Helga", "Igor", "Jana", "Karl",
        "Lotte", "Milan", "Nadia", "Olaf", "Pia", "Ruben", "Sara", "Theo",
        "Uma", "Viktor", "Willa", "Aldo", "Berta", "Cyril", "Daria",
        "Elias", "Frida", "Gregor", "Hilda", "Isak", "Jolanda", "Konrad",
        "Lydia", "Moritz", "Nina", "Oskar", "Philipp", "Rahel", "Sven",
        "Teresa", "Udo", "Valentin", "Wilma", "Arno", "Britta"}},
      {"VERB",
       {"sees", "finds", "takes", "makes", "opens", "closes", "carries",
        "paints", "builds", "reads", "writes", "watches", "follows",
        "visits", "leaves", "answers", "remembers", "forgets", "helps",
        "calls", "brings", "keeps", "moves", "holds", "pulls", "pushes",
        "lifts", "drops", "throws", "catches", "cleans", "fixes", "breaks",
        "sells", "buys", "counts", "draws", "hides", "shows", "tells",
        "walks", "runs", "sleeps", "waits", "sings", "laughs", "smiles",
        "works", "travels", "returns", "asks", "gives", "sends", "lends",
        "borrows", "steals", "gathers", "collects", "scatters", "plants",
        "grows", "picks", "cuts", "chops", "slices", "stirs", "bakes",
        "cooks", "boils", "fries", "roasts", "pours", "fills", "empties",
        "washes", "dries", "folds", "irons", "sews", "knits", "weaves",
        "ties", "unties", "wraps", "packs", "unpacks", "loads", "climbs",
        "jumps", "hops", "skips", "dances", "swims", "dives", "floats",
        "sinks", "flies", "lands", "sails", "rows", "rides", "drives",
        "steers", "parks", "crosses", "passes", "enters", "exits",
        "arrives", "departs", "wanders", "roams", "explores", "searches",
        "seeks", "hunts", "chases", "guards", "protects", "defends",
        "attacks", "fights", "wins", "loses", "plays", "teaches", "learns",
        "studies", "explains", "describes", "mentions", "repeats",
        "whispers", "shouts", "cries", "sighs", "yawns", "coughs",
        "sneezes", "listens", "hears", "notices", "observes", "examines",
        "measures", "weighs", "tests", "tries", "chooses", "decides",
        "prefers", "likes", "loves", "hates", "fears", "admires", "envies",
        "trusts", "doubts", "believes", "imagines", "wonders", "hopes",
        "wishes", "dreams", "expects", "forgives", "thanks", "greets",
        "meets", "joins", "leads", "guides", "warns", "reminds", "invites",
        "welcomes", "feeds", "serves", "offers", "accepts", "refuses",
        "rejects", "receives", "delivers", "orders", "requests", "demands",
        "allows", "forbids", "prevents", "stops", "starts", "begins",
        "ends", "finishes", "completes", "continues", "repairs", "replaces",
        "removes", "adds", "mixes", "divides", "shares", "splits", "spends",
        "saves", "earns", "pays", "owes", "rents", "owns", "hires", "fires",
        "knocks", "rings", "taps", "kicks", "hits", "strikes", "shakes",
        "rocks", "rolls", "spins", "turns", "twists", "bends", "stretches",
        "touches", "strokes", "hugs", "kisses", "kneels", "bows", "nods",
        "waves", "points", "stares", "glances", "blinks", "winks", "frowns",
        "grins", "giggles", "mumbles", "stammers", "sketches", "traces",
        "copies", "prints", "signs", "marks", "labels", "names", "records",
        "films", "photographs", "praises", "blames", "scolds", "punishes",
        "rewards", "celebrates", "mourns", "honors", "inspects", "checks",
        "sorts", "arranges", "organizes", "prepares", "plans", "invents",
        "designs", "discovers", "reveals", "conceals", "buries", "digs",
        "ploughs", "harvests", "waters", "trims", "polishes", "decorates",
        "lights", "burns", "melts", "freezes", "warms", "cools", "heats"}},
      {"AUX",
       {"is", "was", "will", "can", "must", "might", "should", "would",
        "could", "may", "shall", "has", "had", "does", "did", "are", "were"}},
      {"ADV",
       {"slowly", "quickly", "often", "seldom", "always", "soon", "again",
        "quietly", "gladly", "rarely", "nearly", "simply", "surely",
        "loudly", "calmly", "boldly", "softly", "sadly", "briefly", "truly",
        "gently", "kindly", "warmly", "coldly", "sharply", "brightly",
        "darkly", "happily", "angrily", "eagerly", "lazily", "proudly",
        "humbly", "honestly", "politely", "rudely", "carefully",
        "carelessly", "secretly", "openly", "suddenly", "finally",
        "firstly", "lately", "recently", "already", "still", "today",
        "tomorrow", "yesterday", "tonight", "here", "there", "everywhere",
        "somewhere", "nowhere", "anywhere", "inside", "outside", "upstairs",
        "downstairs", "away", "back", "forward", "together", "apart",
        "alone", "almost", "quite", "rather", "very", "too", "fairly",
        "merely", "perhaps", "maybe", "certainly", "probably", "possibly",
        "clearly", "plainly", "wisely", "foolishly", "bravely", "fiercely",
        "nervously", "patiently", "anxiously", "cheerfully", "gracefully",
        "clumsily", "neatly", "tidily", "roughly", "smoothly", "silently",
        "noisily", "swiftly", "steadily", "slightly", "deeply", "widely"}},
      {"ADP",
       {"in", "on", "at", "near", "under", "over", "behind", "beside",
        "across", "through", "from", "with", "without", "toward", "above",
        "below", "around", "between", "along", "among", "into", "onto",
        "past", "beyond", "against", "during", "within", "upon", "despite",
        "like"}},
      {"PRON",
       {"she", "he", "they", "we", "it", "you", "someone", "everyone",
        "nobody", "somebody", "anyone", "everybody", "me", "him", "us",
        "them", "something", "nothing", "everything", "anything", "mine",
        "yours"}},
      {"CCONJ",
       {"and", "but", "or", "yet", "so", "nor"}},
      {"SCONJ",
       {"because", "although", "while", "when", "if", "since", "unless",
        "until", "after", "before", "whereas", "once", "whenever",
        "wherever", "though", "whether"}},
      {"PART",
       {"to", "not", "never", "hardly", "barely", "scarcely"}},
      {"NUM",
       {"one", "two", "three", "four", "five", "six", "seven", "eight",
        "nine", "ten", "eleven", "twelve", "fifteen", "twenty", "thirty",
        "forty", "fifty", "hundred", "thousand"}},
      {"PUNCT",
       {".", ",", ";", ":", "!", "?"}},
  };


  const std::map<std::string, Row> rows = {
      {"DET", {{"ADJ", 0.3}, {"NOUN", 0.6}, {"NUM", 0.1}}},
      {"ADJ", {{"NOUN", 0.75}, {"ADJ", 0.1}, {"CCONJ", 0.05}, {"PUNCT", 0.1}}},
      {"NOUN",
       {{"VERB", 0.3}, {"ADP", 0.2}, {"PUNCT", 0.15}, {"CCONJ", 0.1},
        {"AUX", 0.1}, {"NOUN", 0.05}, {"SCONJ", 0.05}, {"PART", 0.05}}},
      {"PROPN",
       {{"VERB", 0.5}, {"AUX", 0.2}, {"PROPN", 0.1}, {"PUNCT", 0.1},
        {"CCONJ", 0.1}}},
      {"VERB",
       {{"DET", 0.3}, {"ADP", 0.2}, {"ADV", 0.1}, {"PRON", 0.15},
        {"PART", 0.1}, {"PUNCT", 0.1}, {"ADJ", 0.05}}},
      {"AUX", {{"VERB", 0.6}, {"ADJ", 0.2}, {"ADV", 0.1}, {"PART", 0.1}}},
      {"ADV", {{"VERB", 0.4}, {"ADJ", 0.3}, {"PUNCT", 0.2}, {"ADV", 0.1}}},
      {"ADP",
       {{"DET", 0.5}, {"NOUN", 0.15}, {"PROPN", 0.15}, {"PRON", 0.1},
        {"NUM", 0.1}}},
      {"PRON", {{"VERB", 0.6}, {"AUX", 0.4}}},
      {"CCONJ",
       {{"DET", 0.3}, {"PRON", 0.3}, {"VERB", 0.2}, {"ADJ", 0.1},
        {"PROPN", 0.1}}},
      {"SCONJ", {{"PRON", 0.5}, {"DET", 0.5}}},
      {"PART", {{"VERB", 1.0}}},
      {"NUM", {{"NOUN", 1.0}}},
      {"PUNCT",
       {{"CCONJ", 0.3}, {"DET", 0.3}, {"PRON", 0.2}, {"SCONJ", 0.2}}},
  };
  const Row initial = {{"DET", 0.35}, {"PRON", 0.2}, {"PROPN", 0.15},
                       {"ADV", 0.05}, {"ADJ", 0.05}, {"NOUN", 0.1},
                       {"SCONJ", 0.05}, {"NUM", 0.05}};

  MarkovTagSource source;
  for (const auto& [tag, emitted] : words) {
    source.tags.push_back(tag);
    source.emissions.push_back(emitted);
  }
  auto dense = [&](const Row& row) {
    std::vector<double> out(source.tags.size(), 0.0);
    for (std::size_t i = 0; i < source.tags.size(); ++i) {
      if (const auto it = row.find(source.tags[i]); it != row.end()) {
        out[i] = it->second;
      }
    }
    return out;
  };
  for (const auto& tag : source.tags) {
    source.transition.push_back(dense(rows.at(tag)));
  }
  source.initial = dense(initial);
  source.min_length = 4;
  source.max_length = 16;
  source.Validate();
  return source;
}

}  // namespace

const MarkovTagSource& DefaultToyGrammar() {
  static const MarkovTagSource kGrammar = BuildDefaultGrammar();
  return kGrammar;
}

}  // namespace lingmark
