from src.automaton.dfa import DominanceAutomaton
from src.automaton.letters import LetterClass, letter_classes
from src.automaton.transfer import automaton_gf
