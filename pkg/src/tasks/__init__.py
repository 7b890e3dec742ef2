from src.tasks.automaton_dump import automaton_dump
from src.tasks.chart import chart
from src.tasks.classify import classify
from src.tasks.gf import gf
from src.tasks.mu import mu
from src.tasks.recover import recover
from src.tasks.verify import verify

# command -> (config name, task)
TASKS = {
    "gf": ("gf", gf),
    "mu": ("mu", mu),
    "chart": ("chart", chart),
    "recover": ("recover", recover),
    "classify": ("classify", classify),
    "verify": ("verify", verify),
    "automaton-dump": ("automaton_dump", automaton_dump),
}
