from DiophTools.ChosenNum.hits.approximants import *
from DiophTools.ChosenNum.hits.hits import *
